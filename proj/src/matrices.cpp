#include "ppsym/matrices.hpp"

#include <json.hpp>

#include <utility>

namespace ppsym {

namespace {

void require_positive_order(int n, const char* who) {
    if (n < 1) {
        throw std::invalid_argument(std::string(who) + ": order must be >= 1, got " +
                                    std::to_string(n));
    }
}

}  // namespace

RationalMatrix::RationalMatrix(int order) : order_(order) {
    require_positive_order(order, "RationalMatrix");
    entries_.assign(static_cast<std::size_t>(order) * order, Rational(0));
}

std::size_t RationalMatrix::index(int i, int j) const {
    if (i < 0 || i >= order_ || j < 0 || j >= order_) {
        throw std::out_of_range("RationalMatrix: index (" + std::to_string(i) + "," +
                                std::to_string(j) + ") outside order " + std::to_string(order_));
    }
    return static_cast<std::size_t>(i) * order_ + j;
}

RationalMatrix RationalMatrix::identity(int order) {
    RationalMatrix m(order);
    for (int i = 0; i < order; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

RationalMatrix build_U(int n) {
    require_positive_order(n, "build_U");
    RationalMatrix m(n);
    const Rational half = make_rational(1, 2);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = half * Rational(binom(i + j, 2 * i - j)) +
                         Rational(binom(i + j, 2 * i - j - 1));
        }
    }
    return m;
}

RationalMatrix build_w(int n) {
    require_positive_order(n, "build_w");
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = Rational(binom(i + j + 1, 2 * i - j) + binom(i + j, 2 * i - j - 1));
        }
    }
    return m;
}

RationalMatrix build_st(int n) {
    require_positive_order(n, "build_st");
    RationalMatrix m(n);
    m.at(0, 0) = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            BigInt sum = 0;
            for (long long s = 2LL * i - j + 1; s <= 2LL * j - i; ++s) {
                sum += binom(i + j, s);
            }
            m.at(i, j) = Rational(sum);
            m.at(j, i) = Rational(-sum);
        }
    }
    return m;
}

Rational determinant(const RationalMatrix& m) {
    const int n = m.order();

    // Clear denominators row by row so elimination stays over the integers.
    std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
    Rational cleared = 1;  // det(m) = det(a) / cleared
    for (int i = 0; i < n; ++i) {
        BigInt scale = 1;
        for (int j = 0; j < n; ++j) {
            scale = lcm(scale, denominator(m.at(i, j)));
        }
        for (int j = 0; j < n; ++j) {
            const Rational& e = m.at(i, j);
            a[static_cast<std::size_t>(i) * n + j] = numerator(e) * (scale / denominator(e));
        }
        cleared *= Rational(scale);
    }

    auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * n + j]; };

    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot_row = -1;
        for (int r = k; r < n; ++r) {
            if (at(r, k) != 0) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) {
            return 0;
        }
        if (pivot_row != k) {
            for (int j = k; j < n; ++j) {
                std::swap(at(k, j), at(pivot_row, j));
            }
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                // Bareiss one-step update; the division by the previous
                // pivot is exact.
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }

    return Rational(sign * at(n - 1, n - 1)) / cleared;
}

Rational determinant_gauss(const RationalMatrix& m) {
    const int n = m.order();
    std::vector<Rational> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
        }
    }
    auto at = [&](int i, int j) -> Rational& { return a[static_cast<std::size_t>(i) * n + j]; };

    Rational det = 1;
    for (int k = 0; k < n; ++k) {
        int pivot_row = -1;
        for (int r = k; r < n; ++r) {
            if (at(r, k) != 0) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) {
            return 0;
        }
        if (pivot_row != k) {
            for (int j = k; j < n; ++j) {
                std::swap(at(k, j), at(pivot_row, j));
            }
            det = -det;
        }
        det *= at(k, k);
        for (int i = k + 1; i < n; ++i) {
            const Rational factor = at(i, k) / at(k, k);
            for (int j = k; j < n; ++j) {
                at(i, j) -= factor * at(k, j);
            }
        }
    }
    return det;
}

BigInt cssc_det(int n) {
    require_positive_order(n, "cssc_det");
    const Rational value = Rational(pow2(static_cast<unsigned>(n))) * determinant(build_U(n));
    BigInt count = to_integer(value);
    if (count <= 0) {
        throw identity_error("cssc_det(" + std::to_string(n) + ") is not positive: " +
                             count.str());
    }
    return count;
}

namespace {

BigInt square_determinant(const RationalMatrix& m, const std::string& label) {
    BigInt det = to_integer(determinant(m));
    BigInt root;
    if (!perfect_square(det, root)) {
        throw identity_error(label + " = " + det.str() + " is not a perfect square");
    }
    return det;
}

}  // namespace

BigInt tssc_sq_st(int n) {
    require_positive_order(n, "tssc_sq_st");
    return square_determinant(build_st(n), "det st(" + std::to_string(n) + ")");
}

BigInt tssc_sq_w(int n) {
    require_positive_order(n, "tssc_sq_w");
    return square_determinant(build_w(n), "det w(" + std::to_string(n) + ")");
}

BigInt tssc_implied(int n) {
    BigInt root;
    perfect_square(tssc_sq_st(n), root);  // tssc_sq_st already rejected non-squares
    return root;
}

std::string matrix_csv(const RationalMatrix& m) {
    std::string out;
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (j > 0) {
                out += ',';
            }
            out += rational_str(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string matrix_json(const RationalMatrix& m) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (int i = 0; i < m.order(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.order(); ++j) {
            row.push_back(rational_str(m.at(i, j)));
        }
        entries.push_back(std::move(row));
    }
    nlohmann::ordered_json doc;
    doc["order"] = m.order();
    doc["entries"] = std::move(entries);
    return doc.dump();
}

}  // namespace ppsym
