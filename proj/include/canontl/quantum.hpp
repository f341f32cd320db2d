#pragma once

#include <vector>

#include "canontl/spin.hpp"
#include "canontl/tldiagram.hpp"

namespace canontl {

enum class QGen { E, F, K, Kinv };

// comultiplied action on the n-fold tensor power:
//   E -> sum_i K^{-1} ... K^{-1} E 1 ... 1
//   F -> sum_i 1 ... 1 F K ... K
//   K -> q^{#+ - #-} on basis strings
SpinVector q_apply(QGen g, const SpinVector& v);

// E v = 0, F v = 0, K v = v
bool is_invariant(const SpinVector& v);

enum class CapCup { cap, cup };

// whether the cap (length n -> n-2) or cup (n-2 -> n) at slot i commutes
// with E, F and K on every basis vector of the domain
bool check_module_hom(CapCup op, int i, int n);

// send an (n,n)-diagram to a vector of length 2n: tensor with n vertical
// lines, stack on the fully nested diagram, act on the base vector
SpinVector embed_TL(const TLDiagram& d);

// exact row reduction
int rational_rank(std::vector<std::vector<mpq_class>> m);

// dimension of {v : Ev = Fv = 0, Kv = v} in the n-fold tensor power with q
// specialized to a nonzero rational
int invariant_dimension(int n, const mpq_class& q);

}  // namespace canontl
