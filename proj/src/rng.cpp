#include "cremona/rng.hpp"

#include <numeric>

namespace cremona {

Rat RationalEnumeration::next() {
    while (pending_.empty()) {
        ++height_;
        const long h = height_;
        if (h == 0) {
            pending_.emplace_back(0);
            continue;
        }
        for (long q = 1; q <= h; ++q) {
            if (q < h) {
                if (std::gcd(h, q) == 1) {
                    pending_.emplace_back(h, q);
                    pending_.emplace_back(-h, q);
                }
            } else if (h == 1) {
                pending_.emplace_back(1);
                pending_.emplace_back(-1);
            } else {
                for (long p = 1; p < h; ++p) {
                    if (std::gcd(p, h) == 1) {
                        pending_.emplace_back(p, h);
                        pending_.emplace_back(-p, h);
                    }
                }
            }
        }
    }
    Rat r = pending_.front();
    pending_.pop_front();
    return r;
}

}  // namespace cremona
