#include "linclass/gf.hpp"

#include <stdexcept>

namespace linclass {

namespace {

Field make_field(int q) {
    Field f{};
    f.q = q;
    f.p = (q == 4) ? 2 : q;
    f.aut_order = (q == 4) ? 2 : 1;
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            int s, m;
            if (q == 4) {
                s = a ^ b;
                // multiply in F2[w]/(w^2+w+1), bit0 = 1-part, bit1 = w-part
                int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
                int c0 = (a0 & b0) ^ (a1 & b1);
                int c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
                m = c0 | (c1 << 1);
            } else {
                s = (a + b) % q;
                m = (a * b) % q;
            }
            f.add_t[a][b] = (Felt)s;
            f.mul_t[a][b] = (Felt)m;
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b)
            if (f.add_t[b][a] == 0) f.neg_t[a] = (Felt)b;
        for (int b = 1; b < q; ++b)
            if (f.mul_t[a][b] == 1) f.inv_t[a] = (Felt)b;
        f.frob_t[a] = (q == 4) ? f.mul_t[a][a] : (Felt)a;
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) f.sub_t[a][b] = f.add_t[a][f.neg_t[b]];
    return f;
}

}  // namespace

const Field& field(int q) {
    static const Field f2 = make_field(2);
    static const Field f3 = make_field(3);
    static const Field f4 = make_field(4);
    switch (q) {
        case 2: return f2;
        case 3: return f3;
        case 4: return f4;
        default: throw std::invalid_argument("field size must be 2, 3 or 4");
    }
}

}  // namespace linclass
