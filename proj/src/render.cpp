#include "canontl/render.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

namespace canontl {

namespace {

using Arc = std::pair<int, int>;

// nesting depth, innermost arc = 1
std::map<Arc, int> arc_depths(std::vector<Arc> arcs) {
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
        return a.second - a.first < b.second - b.first;
    });
    std::map<Arc, int> out;
    for (const Arc& a : arcs) {
        int inner = 0;
        for (const auto& [b, db] : out)
            if (a.first < b.first && b.second < a.second) inner = std::max(inner, db);
        out[a] = inner + 1;
    }
    return out;
}

int max_depth(const std::map<Arc, int>& d) {
    int m = 0;
    for (const auto& [a, v] : d) m = std::max(m, v);
    return m;
}

}  // namespace

std::string ascii_diagram(const TLDiagram& d) {
    const int m = d.bottom_count(), n = d.top_count();
    auto col = [](int i) { return 4 * (i - 1); };
    std::map<Arc, int> tops = arc_depths(d.top_arcs());
    std::map<Arc, int> bots = arc_depths(d.bottom_arcs());
    const int dt = max_depth(tops), db = max_depth(bots);
    bool slanted = false;
    for (const auto& [b, t] : d.through_strands())
        if (col(b) != col(t)) slanted = true;
    const int body = std::max(dt + db + (slanted ? 2 : 1), 2);
    const int rows = body + 2;
    const int width = std::max(col(std::max(m, n)) + 3, 1);
    std::vector<std::string> g(rows, std::string(width, ' '));

    auto put = [&](int r, int c, char ch) {
        if (r >= 0 && r < rows && c >= 0 && c < width) g[r][c] = ch;
    };
    auto label = [&](int r, int i) {
        std::string s = std::to_string(i);
        for (size_t t = 0; t < s.size(); ++t) put(r, col(i) + (int)t, s[t]);
    };
    for (int i = 1; i <= n; ++i) label(0, i);
    for (int i = 1; i <= m; ++i) label(rows - 1, i);

    for (const auto& [a, depth] : tops) {
        int xl = col(a.first), xr = col(a.second);
        for (int r = 1; r < depth; ++r) put(r, xl, '|'), put(r, xr, '|');
        put(depth, xl, '+');
        put(depth, xr, '+');
        for (int x = xl + 1; x < xr; ++x) put(depth, x, '-');
    }
    for (const auto& [a, depth] : bots) {
        int xl = col(a.first), xr = col(a.second);
        for (int r = rows - 1 - depth + 1; r <= rows - 2; ++r)
            put(r, xl, '|'), put(r, xr, '|');
        put(rows - 1 - depth, xl, '+');
        put(rows - 1 - depth, xr, '+');
        for (int x = xl + 1; x < xr; ++x) put(rows - 1 - depth, x, '-');
    }
    for (const auto& [b, t] : d.through_strands()) {
        int xt = col(t), xb = col(b);
        int prev = xt;
        for (int r = 1; r <= rows - 2; ++r) {
            int x = (int)std::lround(xt + double(xb - xt) * (r - 1) / (rows - 3));
            for (int xx = std::min(prev, x) + 1; xx < std::max(prev, x); ++xx)
                put(r, xx, '_');
            put(r, x, x > prev ? '\\' : x < prev ? '/' : '|');
            prev = x;
        }
    }

    std::string out;
    for (std::string& row : g) {
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

std::string svg_diagram(const TLDiagram& d) {
    const int m = d.bottom_count(), n = d.top_count();
    const int step = 40, yt = 40, yb = 160;
    const int width = step * (std::max({m, n, 1}) + 1);
    auto x = [&](int i) { return step * i; };
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"200\" viewBox=\"0 0 " +
         std::to_string(width) + " 200\">\n";
    s += "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
    auto arc_path = [&](int xl, int xr, int y, int sweep) {
        int r = (xr - xl) / 2;
        return "<path d=\"M " + std::to_string(xl) + " " + std::to_string(y) +
               " A " + std::to_string(r) + " " + std::to_string(r) + " 0 0 " +
               std::to_string(sweep) + " " + std::to_string(xr) + " " +
               std::to_string(y) + "\"/>\n";
    };
    for (const auto& [a, b] : d.top_arcs()) s += arc_path(x(a), x(b), yt, 0);
    for (const auto& [a, b] : d.bottom_arcs()) s += arc_path(x(a), x(b), yb, 1);
    for (const auto& [b, t] : d.through_strands())
        s += "<line x1=\"" + std::to_string(x(t)) + "\" y1=\"" + std::to_string(yt) +
             "\" x2=\"" + std::to_string(x(b)) + "\" y2=\"" + std::to_string(yb) +
             "\"/>\n";
    s += "</g>\n<g fill=\"black\">\n";
    for (int i = 1; i <= n; ++i)
        s += "<circle cx=\"" + std::to_string(x(i)) + "\" cy=\"" + std::to_string(yt) +
             "\" r=\"3\"/>\n";
    for (int i = 1; i <= m; ++i)
        s += "<circle cx=\"" + std::to_string(x(i)) + "\" cy=\"" + std::to_string(yb) +
             "\" r=\"3\"/>\n";
    s += "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
    for (int i = 1; i <= n; ++i)
        s += "<text x=\"" + std::to_string(x(i)) + "\" y=\"" + std::to_string(yt - 12) +
             "\">" + std::to_string(i) + "</text>\n";
    for (int i = 1; i <= m; ++i)
        s += "<text x=\"" + std::to_string(x(i)) + "\" y=\"" + std::to_string(yb + 20) +
             "\">" + std::to_string(i) + "</text>\n";
    s += "</g>\n</svg>\n";
    return s;
}

}  // namespace canontl
