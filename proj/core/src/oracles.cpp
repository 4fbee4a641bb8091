#include "wheelhouse/oracles.hpp"
#include "wheelhouse/ideal.hpp"

#include <algorithm>
#include <numeric>

namespace wheelhouse {
namespace oracle {

long lyndon_count(int n) {
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    long count = 0;
    do {
        // Lyndon: strictly smaller than all proper rotations
        bool lyndon = true;
        for (int r = 1; r < n && lyndon; ++r) {
            std::vector<int> rot(word.begin() + r, word.end());
            rot.insert(rot.end(), word.begin(), word.begin() + r);
            if (!(word < rot)) lyndon = false;
        }
        if (lyndon) ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    return count;
}

int lie_wheeled_dim(int m, int n, int vertices) {
    Preset p = make_preset("lie_quadratic_wheeled");
    return quotient_dim(p, m, n, vertices, WheelMode::Unrestricted);
}

int lieb_dim(int m, int n, int vertices) {
    Preset p = make_preset("lieb_quadratic");
    return quotient_dim(p, m, n, vertices, WheelMode::None);
}

} // namespace oracle
} // namespace wheelhouse
