#include "orbiroot/local_model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "linalg.hpp"

namespace orbiroot {

LocalRing LocalRing::make(int root_index, int precision) {
    if (root_index < 1) {
        throw DomainError("root_index must be >= 1");
    }
    if (precision < 1 || precision % root_index != 0) {
        throw DomainError("precision N must be a positive multiple of r (got N = " + std::to_string(precision) +
                          ", r = " + std::to_string(root_index) + ")");
    }
    return LocalRing{root_index, precision};
}

// ---- TruncatedPoly ---------------------------------------------------------

TruncatedPoly TruncatedPoly::monomial(int precision, const Rational& c, int exponent) {
    TruncatedPoly p(precision);
    if (exponent >= 0 && exponent < precision) {
        p.coeffs_[static_cast<std::size_t>(exponent)] = c;
    }
    return p;
}

bool TruncatedPoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

int TruncatedPoly::valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) {
            return static_cast<int>(k);
        }
    }
    return precision();
}

TruncatedPoly TruncatedPoly::operator+(const TruncatedPoly& other) const {
    TruncatedPoly out = *this;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out.coeffs_[k] += other.coeffs_[k];
    }
    return out;
}

TruncatedPoly TruncatedPoly::operator-(const TruncatedPoly& other) const {
    TruncatedPoly out = *this;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out.coeffs_[k] -= other.coeffs_[k];
    }
    return out;
}

TruncatedPoly TruncatedPoly::operator*(const TruncatedPoly& other) const {
    const std::size_t n = coeffs_.size();
    TruncatedPoly out(static_cast<int>(n));
    for (std::size_t a = 0; a < n; ++a) {
        if (coeffs_[a].is_zero()) continue;
        for (std::size_t b = 0; a + b < n; ++b) {
            if (other.coeffs_[b].is_zero()) continue;
            out.coeffs_[a + b] += coeffs_[a] * other.coeffs_[b];
        }
    }
    return out;
}

TruncatedPoly TruncatedPoly::shifted(int k) const {
    TruncatedPoly out(precision());
    for (int e = 0; e + k < precision(); ++e) {
        if (e + k >= 0) {
            out.coeffs_[static_cast<std::size_t>(e + k)] = coeffs_[static_cast<std::size_t>(e)];
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, int precision) : text_(text), precision_(precision) {}

    TruncatedPoly parse() {
        TruncatedPoly result(precision_);
        skip_space();
        if (at_end()) {
            fail("empty polynomial");
        }
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [coeff, exponent] = term();
            if (exponent < precision_) {
                result[static_cast<std::size_t>(exponent)] += coeff * sign;
            }
            first = false;
            skip_space();
        }
        return result;
    }

private:
    std::pair<Rational, int> term() {
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) {
                ++pos_;
            }
            try {
                coeff = parse_rational(text_.substr(start, pos_ - start));
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
            have_coeff = true;
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_space();
                if (at_end() || peek() != 't') {
                    fail("expected 't' after '*'");
                }
            }
        }
        int exponent = 0;
        if (!at_end() && peek() == 't') {
            ++pos_;
            exponent = 1;
            skip_space();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_space();
                std::size_t start = pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                    ++pos_;
                }
                if (start == pos_) {
                    fail("expected exponent after '^'");
                }
                exponent = std::stoi(std::string(text_.substr(start, pos_ - start)));
            }
        } else if (!have_coeff) {
            fail("expected a coefficient or 't'");
        }
        return {coeff, exponent};
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw DomainError("cannot parse polynomial '" + std::string(text_) + "': " + why);
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::string_view text_;
    int precision_;
    std::size_t pos_ = 0;
};

}  // namespace

TruncatedPoly parse_poly(std::string_view text, int precision) {
    return PolyParser(text, precision).parse();
}

std::string to_string(const TruncatedPoly& p) {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < p.precision(); ++k) {
        const Rational& c = p[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational magnitude = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << to_display_string(magnitude);
        } else {
            if (magnitude != 1) out << to_display_string(magnitude) << "*";
            out << "t";
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return first ? "0" : out.str();
}

int homogeneous_degree(const TruncatedPoly& p, int root_index) {
    int degree = -1;
    for (int k = 0; k < p.precision(); ++k) {
        if (p[static_cast<std::size_t>(k)].is_zero()) continue;
        int cls = k % root_index;
        if (degree >= 0 && cls != degree) {
            throw DomainError("non-homogeneous element '" + to_string(p) + "'");
        }
        degree = cls;
    }
    if (degree < 0) {
        throw DomainError("zero element has no degree");
    }
    return degree;
}

// ---- GradedModule ----------------------------------------------------------

GradedModule::GradedModule(LocalRing ring, std::vector<int> ambient, std::vector<std::vector<TruncatedPoly>> matrix)
    : ring_(ring), ambient_(std::move(ambient)), matrix_(std::move(matrix)) {
    const int r = ring_.root_index;
    const std::size_t n = ambient_.size();
    if (matrix_.size() != n) {
        throw DomainError("matrix has " + std::to_string(matrix_.size()) + " rows but " + std::to_string(n) +
                          " ambient degrees");
    }
    for (auto& a : ambient_) {
        a = static_cast<int>(floor_mod(a, r));
    }
    for (const auto& row : matrix_) {
        if (row.size() != n) {
            throw DomainError("presentation matrix must be square");
        }
        for (const auto& entry : row) {
            if (entry.precision() != ring_.precision) {
                throw DomainError("matrix entry precision does not match the ring");
            }
        }
    }
    column_degrees_.assign(n, -1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto& entry = matrix_[i][j];
            if (entry.is_zero()) continue;
            int cls = static_cast<int>(floor_mod(homogeneous_degree(entry, r) + ambient_[i], r));
            if (column_degrees_[j] >= 0 && column_degrees_[j] != cls) {
                throw DomainError("non-homogeneous generator: column " + std::to_string(j) + " mixes degrees " +
                                  std::to_string(column_degrees_[j]) + " and " + std::to_string(cls));
            }
            column_degrees_[j] = cls;
        }
        if (column_degrees_[j] < 0) {
            throw DomainError("column " + std::to_string(j) + " is zero; the module is not free of full rank");
        }
    }
}

GradedModule standard_module(const LocalRing& ring, const std::vector<int>& shifts) {
    const std::size_t n = shifts.size();
    std::vector<std::vector<TruncatedPoly>> matrix(n, std::vector<TruncatedPoly>(n, TruncatedPoly(ring.precision)));
    for (std::size_t i = 0; i < n; ++i) {
        matrix[i][i] = TruncatedPoly::monomial(ring.precision, Rational(1), 0);
    }
    return GradedModule(ring, shifts, std::move(matrix));
}

GradedModule change_basis(const GradedModule& module, const std::vector<std::vector<TruncatedPoly>>& transform) {
    const std::size_t n = module.size();
    const int N = module.ring().precision;
    if (transform.size() != n) {
        throw DomainError("change of basis has the wrong size");
    }
    std::vector<std::vector<TruncatedPoly>> product(n, std::vector<TruncatedPoly>(n, TruncatedPoly(N)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                if (transform[j].size() != n) {
                    throw DomainError("change of basis must be square");
                }
                if (module.entry(i, j).is_zero() || transform[j][k].is_zero()) continue;
                product[i][k] = product[i][k] + module.entry(i, j) * transform[j][k];
            }
        }
    }
    return GradedModule(module.ring(), module.ambient(), std::move(product));
}

TruncatedPoly determinant(const LocalRing& ring, const std::vector<std::vector<TruncatedPoly>>& matrix) {
    const std::size_t n = matrix.size();
    if (n > 16) {
        throw DomainError("determinant limited to rank <= 16");
    }
    // dp[S] = determinant of the minor on rows 0..|S|-1 and the column set S.
    std::vector<TruncatedPoly> dp(std::size_t{1} << n, TruncatedPoly(ring.precision));
    dp[0] = TruncatedPoly::monomial(ring.precision, Rational(1), 0);
    for (std::size_t set = 1; set < dp.size(); ++set) {
        const auto row = static_cast<std::size_t>(__builtin_popcountll(set)) - 1;
        // Expand along the last row of the minor; columns in increasing order.
        int position = 0;
        TruncatedPoly total(ring.precision);
        for (std::size_t col = 0; col < n; ++col) {
            if (!(set & (std::size_t{1} << col))) continue;
            const auto& rest = dp[set & ~(std::size_t{1} << col)];
            const auto& a = matrix[row][col];
            if (!a.is_zero() && !rest.is_zero()) {
                TruncatedPoly term = a * rest;
                // Cofactor sign: (-1)^(row + position).
                total = ((row + static_cast<std::size_t>(position)) % 2 == 0) ? total + term : total - term;
            }
            ++position;
        }
        dp[set] = std::move(total);
    }
    return dp.back();
}

bool GradedModule::is_free() const {
    if (!free_) {
        free_ = !determinant(ring_, matrix_).is_zero();
    }
    return *free_;
}

namespace {

/// Coordinates of A^n lying in one degree class, as a dense index map.
struct ClassCoordinates {
    std::vector<std::ptrdiff_t> index;  // (i * N + e) -> position or -1
    std::size_t dimension = 0;
};

ClassCoordinates class_coordinates(const GradedModule& module, int cls) {
    const int r = module.ring().root_index;
    const int N = module.ring().precision;
    ClassCoordinates coords;
    coords.index.assign(module.size() * static_cast<std::size_t>(N), -1);
    for (std::size_t i = 0; i < module.size(); ++i) {
        for (int e = 0; e < N; ++e) {
            if (floor_mod(e + module.ambient()[i], r) == cls) {
                coords.index[i * static_cast<std::size_t>(N) + static_cast<std::size_t>(e)] =
                    static_cast<std::ptrdiff_t>(coords.dimension++);
            }
        }
    }
    return coords;
}

/// t^k times column j, restricted to the coordinates of its degree class.
std::vector<Rational> shifted_column(const GradedModule& module, const ClassCoordinates& coords, std::size_t j,
                                     int k) {
    const int N = module.ring().precision;
    std::vector<Rational> v(coords.dimension, Rational(0));
    for (std::size_t i = 0; i < module.size(); ++i) {
        const auto& entry = module.entry(i, j);
        for (int e = 0; e + k < N; ++e) {
            const Rational& c = entry[static_cast<std::size_t>(e)];
            if (c.is_zero()) continue;
            auto pos = coords.index[i * static_cast<std::size_t>(N) + static_cast<std::size_t>(e + k)];
            if (pos < 0) {
                throw VerificationError("homogeneous column left its degree class");
            }
            v[static_cast<std::size_t>(pos)] = c;
        }
    }
    return v;
}

/// Span of {t^k c_j : k >= min_shift, g_j + k = cls mod r}.
detail::IntegerSpan class_span(const GradedModule& module, const ClassCoordinates& coords, int cls,
                                   int min_shift) {
    const int r = module.ring().root_index;
    const int N = module.ring().precision;
    detail::IntegerSpan span(coords.dimension);
    for (std::size_t j = 0; j < module.size(); ++j) {
        int k = static_cast<int>(floor_mod(cls - module.column_degrees()[j], r));
        while (k < min_shift) k += r;
        for (; k < N; k += r) {
            span.insert(shifted_column(module, coords, j, k));
        }
    }
    return span;
}

void require_free(const GradedModule& module) {
    if (!module.is_free()) {
        throw DomainError("presentation matrix is singular modulo t^N; the module is not free of full rank");
    }
}

}  // namespace

ShiftMultiset graded_quotient_dimensions(const GradedModule& module) {
    const int r = module.ring().root_index;
    ShiftMultiset dims(static_cast<std::size_t>(r), 0);
    for (int cls = 0; cls < r; ++cls) {
        auto coords = class_coordinates(module, cls);
        auto whole = class_span(module, coords, cls, 0);
        auto shifted = class_span(module, coords, cls, 1);
        dims[static_cast<std::size_t>(cls)] = whole.rank() - shifted.rank();
    }
    return dims;
}

ShiftMultiset decompose_shifts(const GradedModule& module) {
    require_free(module);
    const int r = module.ring().root_index;
    ShiftMultiset lifts(static_cast<std::size_t>(r), 0);
    for (int g : module.column_degrees()) {
        ++lifts[static_cast<std::size_t>(g)];
    }
    // Nakayama: the homogeneous lifts are a basis iff their images span
    // M/tM in each degree.
    if (graded_quotient_dimensions(module) != lifts) {
        throw VerificationError("homogeneous lifts do not match the graded dimensions of M/tM");
    }
    return lifts;
}

InvariantPart invariant_part_rank(const GradedModule& module) {
    require_free(module);
    const int r = module.ring().root_index;
    auto coords = class_coordinates(module, 0);
    auto whole = class_span(module, coords, 0, 0);
    auto by_x = class_span(module, coords, 0, r);

    InvariantPart part;
    part.rank = whole.rank() - by_x.rank();
    for (std::size_t j = 0; j < module.size(); ++j) {
        int k = static_cast<int>(floor_mod(-module.column_degrees()[j], r));
        int valuation = module.ring().precision;
        for (std::size_t i = 0; i < module.size(); ++i) {
            valuation = std::min(valuation, module.entry(i, j).valuation() + k);
        }
        if (valuation >= module.ring().precision) {
            throw DomainError("precision too low: a degree-0 generator vanishes modulo t^N");
        }
        part.valuation_profile.push_back(valuation);
    }
    std::sort(part.valuation_profile.begin(), part.valuation_profile.end());
    if (part.rank != module.size()) {
        throw VerificationError("degree-0 part has rank " + std::to_string(part.rank) + " over Q[x], expected " +
                                std::to_string(module.size()));
    }
    return part;
}

bool cokernel_free_check(const GradedModule& module, std::int64_t l, std::int64_t l_prime) {
    const int r = module.ring().root_index;
    if (l_prime < l || l_prime >= l + r) {
        throw DomainError("cokernel check needs l <= l' < l + r");
    }
    require_free(module);
    const int N = module.ring().precision;
    const auto delta = static_cast<int>(l_prime - l);
    const auto target_class = static_cast<int>(floor_mod(l_prime, r));
    auto coords = class_coordinates(module, target_class);

    // Image of t^delta on M_l inside M_{l'}.
    detail::IntegerSpan image(coords.dimension);
    const auto source_class = static_cast<int>(floor_mod(l, r));
    for (std::size_t j = 0; j < module.size(); ++j) {
        int k = static_cast<int>(floor_mod(source_class - module.column_degrees()[j], r));
        for (; k + delta < N; k += r) {
            image.insert(shifted_column(module, coords, j, k + delta));
        }
    }
    // x = t^r must kill the cokernel: t^r M_{l'} lies in the image.
    for (std::size_t j = 0; j < module.size(); ++j) {
        int k = static_cast<int>(floor_mod(target_class - module.column_degrees()[j], r));
        for (; k + r < N; k += r) {
            if (!image.contains(shifted_column(module, coords, j, k + r))) {
                return false;
            }
        }
    }
    return true;
}

GradedModule local_model_of(const OrbiConfig& cfg, const StackBundle& bundle, int point, const LocalRing& ring) {
    check_stack_bundle(cfg, bundle);
    if (point < 0 || point >= cfg.num_points()) {
        throw DomainError("point index " + std::to_string(point) + " out of range");
    }
    if (ring.root_index != cfg.root_index()) {
        throw DomainError("local ring root index does not match the configuration");
    }
    const std::size_t n = bundle.rank();
    std::vector<std::vector<TruncatedPoly>> matrix(n, std::vector<TruncatedPoly>(n, TruncatedPoly(ring.precision)));
    for (std::size_t j = 0; j < n; ++j) {
        int res = bundle.summands()[j].residues[static_cast<std::size_t>(point)];
        matrix[j][j] = TruncatedPoly::monomial(ring.precision, Rational(1), res);
    }
    return GradedModule(ring, std::vector<int>(n, 0), std::move(matrix));
}

}  // namespace orbiroot
