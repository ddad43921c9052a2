#ifndef LINCLASS_GF_HPP
#define LINCLASS_GF_HPP

#include <cstdint>

namespace linclass {

// Field element label. Elements of F2/F3 are 0..q-1 with arithmetic mod q.
// F4 = F2[w]/(w^2+w+1) with labels 0, 1, 2 = w, 3 = w+1; addition is XOR of
// labels, multiplication follows w^2 = w+1.
using Felt = uint8_t;

// Small prime-power field (q in {2,3,4}) with table-driven arithmetic.
struct Field {
    int q;          // field size
    int p;          // characteristic
    int aut_order;  // |Aut(F_q)|: 1 for prime fields, 2 for F4
    Felt add_t[4][4];
    Felt sub_t[4][4];
    Felt mul_t[4][4];
    Felt inv_t[4];   // inv_t[0] unused
    Felt neg_t[4];
    Felt frob_t[4];  // x -> x^p (identity for q=2,3)

    Felt add(Felt a, Felt b) const { return add_t[a][b]; }
    Felt sub(Felt a, Felt b) const { return sub_t[a][b]; }
    Felt mul(Felt a, Felt b) const { return mul_t[a][b]; }
    Felt inv(Felt a) const { return inv_t[a]; }
    Felt neg(Felt a) const { return neg_t[a]; }
    Felt frob(Felt a) const { return frob_t[a]; }
    // x -> x^(p^e); e taken mod aut_order
    Felt aut(Felt a, int e) const { return (e % aut_order) ? frob_t[a] : a; }
    // Hermitian conjugate x -> x^sqrt(q); only meaningful for q=4
    Felt conj(Felt a) const { return aut_order == 2 ? frob_t[a] : a; }
};

// Returns the shared table set for q in {2,3,4}; throws std::invalid_argument
// for any other q.
const Field& field(int q);

}  // namespace linclass

#endif
