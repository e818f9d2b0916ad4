#include "residua/scalar.hpp"

#include "residua/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace residua {

namespace {

int rank(Scalar::Kind k) {
    switch (k) {
    case Scalar::Kind::bottom: return 0;
    case Scalar::Kind::finite: return 1;
    case Scalar::Kind::top: return 2;
    case Scalar::Kind::entries: break;
    }
    return 1;
}

// Total order of a non-matrix instance.
std::strong_ordering chain_compare(const Scalar& a, const Scalar& b) {
    const int ra = rank(a.kind());
    const int rb = rank(b.kind());
    if (ra != rb) {
        return ra <=> rb;
    }
    if (a.kind() != Scalar::Kind::finite) {
        return std::strong_ordering::equal;
    }
    if (a.value() < b.value()) {
        return std::strong_ordering::less;
    }
    if (b.value() < a.value()) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool is_matrix(const Scalar& a) { return a.semiring().kind() == SemiringKind::matrix; }

// Entrywise combination of two matrix scalars.
template <class F>
Scalar entrywise(const Scalar& a, const Scalar& b, F&& f) {
    const std::size_t n = a.semiring().dim();
    std::vector<Scalar> out;
    out.reserve(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
        out.push_back(f(a.entries()[k], b.entries()[k]));
    }
    return Scalar::matrix(n, std::move(out));
}

Scalar chain_mul(const Scalar& a, const Scalar& b) {
    const SemiringId sr = a.semiring();
    if (a.is_bottom() || b.is_bottom()) {
        return Scalar::bottom(sr);
    }
    if (a.is_top() || b.is_top()) {
        return Scalar::top(sr);
    }
    return Scalar::finite(sr, a.value() + b.value());
}

Scalar chain_lres(const Scalar& a, const Scalar& b) {
    const SemiringId sr = a.semiring();
    if (a.is_bottom()) {
        return Scalar::top(sr);
    }
    if (sr.kind() == SemiringKind::boolean) {
        return b;
    }
    if (a.is_top()) {
        return b.is_top() ? Scalar::top(sr) : Scalar::bottom(sr);
    }
    if (!b.is_finite()) {
        return b;
    }
    Rational d = b.value() - a.value();
    if (sr.kind() == SemiringKind::nmax && d < 0) {
        // No natural λ satisfies a + λ ≤ b.
        return Scalar::bottom(sr);
    }
    return Scalar::finite(sr, std::move(d));
}

} // namespace

SemiringId SemiringId::matrix(std::size_t n) {
    if (n == 0) {
        throw input_error("matrix semiring requires a positive dimension");
    }
    return SemiringId(SemiringKind::matrix, n);
}

SemiringId SemiringId::parse(std::string_view text) {
    if (text == "rmax") {
        return rmax();
    }
    if (text == "boolean") {
        return boolean();
    }
    if (text == "nmax") {
        return nmax();
    }
    constexpr std::string_view prefix = "matrix:";
    if (text.starts_with(prefix)) {
        const std::string_view digits = text.substr(prefix.size());
        std::size_t n = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && n > 0) {
            return matrix(n);
        }
    }
    throw input_error("unknown semiring '" + std::string(text) + "'");
}

std::string SemiringId::name() const {
    switch (kind_) {
    case SemiringKind::rmax: return "rmax";
    case SemiringKind::boolean: return "boolean";
    case SemiringKind::nmax: return "nmax";
    case SemiringKind::matrix: return "matrix:" + std::to_string(dim_);
    }
    return "?";
}

void require_same_semiring(const SemiringId& a, const SemiringId& b, std::string_view what) {
    if (!(a == b)) {
        throw semiring_mismatch(std::string(what) + ": semiring " + a.name() + " vs " + b.name());
    }
}

Scalar Scalar::bottom(SemiringId sr) {
    if (sr.kind() == SemiringKind::matrix) {
        const std::size_t n = sr.dim();
        return matrix(n, std::vector<Scalar>(n * n, bottom(SemiringId::rmax())));
    }
    return Scalar(sr, Kind::bottom);
}

Scalar Scalar::top(SemiringId sr) {
    if (sr.kind() == SemiringKind::matrix) {
        const std::size_t n = sr.dim();
        return matrix(n, std::vector<Scalar>(n * n, top(SemiringId::rmax())));
    }
    return Scalar(sr, Kind::top);
}

Scalar Scalar::unit(SemiringId sr) {
    switch (sr.kind()) {
    case SemiringKind::boolean: return top(sr);
    case SemiringKind::rmax:
    case SemiringKind::nmax: return finite(sr, Rational(0));
    case SemiringKind::matrix: {
        const std::size_t n = sr.dim();
        std::vector<Scalar> e(n * n, bottom(SemiringId::rmax()));
        for (std::size_t i = 0; i < n; ++i) {
            e[i * n + i] = rmax(0);
        }
        return matrix(n, std::move(e));
    }
    }
    return bottom(sr);
}

Scalar Scalar::finite(SemiringId sr, Rational value) {
    switch (sr.kind()) {
    case SemiringKind::rmax: break;
    case SemiringKind::nmax:
        if (value < 0 || boost::multiprecision::denominator(value) != 1) {
            throw input_error("nmax finite values must be nonnegative integers, got " +
                              to_string(value));
        }
        break;
    case SemiringKind::boolean:
        throw input_error("boolean semiring has no finite elements besides eps and e");
    case SemiringKind::matrix:
        throw input_error("matrix scalars are built from entries");
    }
    Scalar s(sr, Kind::finite);
    s.value_ = std::move(value);
    return s;
}

Scalar Scalar::matrix(std::size_t n, std::vector<Scalar> entries) {
    const SemiringId sr = SemiringId::matrix(n);
    if (entries.size() != n * n) {
        throw dimension_mismatch("matrix scalar needs " + std::to_string(n * n) + " entries, got " +
                                 std::to_string(entries.size()));
    }
    for (const Scalar& e : entries) {
        require_same_semiring(e.semiring(), SemiringId::rmax(), "matrix scalar entry");
    }
    Scalar s(sr, Kind::entries);
    s.entries_ = std::move(entries);
    return s;
}

bool Scalar::is_bottom() const {
    if (kind_ == Kind::entries) {
        return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& e) { return e.is_bottom(); });
    }
    return kind_ == Kind::bottom;
}

bool Scalar::is_top() const {
    if (kind_ == Kind::entries) {
        return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& e) { return e.is_top(); });
    }
    return kind_ == Kind::top;
}

const Rational& Scalar::value() const {
    if (kind_ != Kind::finite) {
        throw input_error("value() on a non-finite scalar");
    }
    return value_;
}

std::span<const Scalar> Scalar::entries() const {
    if (kind_ != Kind::entries) {
        throw input_error("entries() on a non-matrix scalar");
    }
    return entries_;
}

const Scalar& Scalar::entry(std::size_t i, std::size_t j) const {
    return entries()[i * sr_.dim() + j];
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.sr_ == b.sr_) || a.kind_ != b.kind_) {
        return false;
    }
    switch (a.kind_) {
    case Scalar::Kind::finite: return a.value_ == b.value_;
    case Scalar::Kind::entries: return a.entries_ == b.entries_;
    default: return true;
    }
}

Scalar add(const Scalar& a, const Scalar& b) {
    require_same_semiring(a.semiring(), b.semiring(), "add");
    if (is_matrix(a)) {
        return entrywise(a, b, [](const Scalar& x, const Scalar& y) { return add(x, y); });
    }
    return chain_compare(a, b) >= 0 ? a : b;
}

Scalar meet(const Scalar& a, const Scalar& b) {
    require_same_semiring(a.semiring(), b.semiring(), "meet");
    if (is_matrix(a)) {
        return entrywise(a, b, [](const Scalar& x, const Scalar& y) { return meet(x, y); });
    }
    return chain_compare(a, b) <= 0 ? a : b;
}

Scalar mul(const Scalar& a, const Scalar& b) {
    require_same_semiring(a.semiring(), b.semiring(), "mul");
    if (!is_matrix(a)) {
        return chain_mul(a, b);
    }
    const std::size_t n = a.semiring().dim();
    const SemiringId r = SemiringId::rmax();
    std::vector<Scalar> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            Scalar acc = Scalar::bottom(r);
            for (std::size_t j = 0; j < n; ++j) {
                acc = add(acc, chain_mul(a.entry(i, j), b.entry(j, k)));
            }
            out.push_back(std::move(acc));
        }
    }
    return Scalar::matrix(n, std::move(out));
}

Scalar lres(const Scalar& a, const Scalar& b) {
    require_same_semiring(a.semiring(), b.semiring(), "lres");
    if (!is_matrix(a)) {
        return chain_lres(a, b);
    }
    // (A\B)_{jk} = ⋀_i A_{ij} \ B_{ik}
    const std::size_t n = a.semiring().dim();
    const SemiringId r = SemiringId::rmax();
    std::vector<Scalar> out;
    out.reserve(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            Scalar acc = Scalar::top(r);
            for (std::size_t i = 0; i < n; ++i) {
                acc = meet(acc, chain_lres(a.entry(i, j), b.entry(i, k)));
            }
            out.push_back(std::move(acc));
        }
    }
    return Scalar::matrix(n, std::move(out));
}

Scalar rres(const Scalar& b, const Scalar& a) {
    require_same_semiring(a.semiring(), b.semiring(), "rres");
    if (!is_matrix(a)) {
        return chain_lres(a, b);
    }
    // (B/A)_{ij} = ⋀_k B_{ik} / A_{jk}
    const std::size_t n = a.semiring().dim();
    const SemiringId r = SemiringId::rmax();
    std::vector<Scalar> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Scalar acc = Scalar::top(r);
            for (std::size_t k = 0; k < n; ++k) {
                acc = meet(acc, chain_lres(a.entry(j, k), b.entry(i, k)));
            }
            out.push_back(std::move(acc));
        }
    }
    return Scalar::matrix(n, std::move(out));
}

bool leq(const Scalar& a, const Scalar& b) {
    require_same_semiring(a.semiring(), b.semiring(), "leq");
    if (is_matrix(a)) {
        const auto ea = a.entries();
        const auto eb = b.entries();
        for (std::size_t k = 0; k < ea.size(); ++k) {
            if (chain_compare(ea[k], eb[k]) > 0) {
                return false;
            }
        }
        return true;
    }
    return chain_compare(a, b) <= 0;
}

bool lt(const Scalar& a, const Scalar& b) { return leq(a, b) && !(a == b); }

std::optional<Scalar> inverse(const Scalar& a) {
    switch (a.semiring().kind()) {
    case SemiringKind::rmax:
        if (a.is_finite()) {
            return Scalar::rmax(-a.value());
        }
        return std::nullopt;
    case SemiringKind::boolean:
        if (a.is_top()) {
            return a;
        }
        return std::nullopt;
    case SemiringKind::nmax:
        if (a.is_finite() && a.value() == 0) {
            return a;
        }
        return std::nullopt;
    case SemiringKind::matrix: break;
    }
    return std::nullopt;
}

std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b) {
    require_same_semiring(a.semiring(), b.semiring(), "compare");
    if (!is_matrix(a)) {
        return chain_compare(a, b);
    }
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) {
        if (auto c = chain_compare(ea[k], eb[k]); c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

std::string to_string(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const std::size_t slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den)) {
        throw input_error("malformed rational '" + std::string(text) + "'");
    }
    const Integer n{std::string(num)};
    const Integer d{std::string(den)};
    if (d == 0) {
        throw input_error("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(n, d);
    return negative ? Rational(-q) : q;
}

std::string to_string(const Scalar& a) {
    switch (a.kind()) {
    case Scalar::Kind::bottom:
        return a.semiring().kind() == SemiringKind::boolean ? "eps" : "-inf";
    case Scalar::Kind::top:
        return a.semiring().kind() == SemiringKind::boolean ? "e" : "+inf";
    case Scalar::Kind::finite: return to_string(a.value());
    case Scalar::Kind::entries: break;
    }
    const std::size_t n = a.semiring().dim();
    std::string out = "[";
    for (std::size_t i = 0; i < n; ++i) {
        out += i == 0 ? "[" : ",[";
        for (std::size_t j = 0; j < n; ++j) {
            if (j > 0) {
                out += ",";
            }
            out += to_string(a.entry(i, j));
        }
        out += "]";
    }
    return out + "]";
}

Scalar parse_scalar(SemiringId sr, std::string_view text) {
    switch (sr.kind()) {
    case SemiringKind::boolean:
        if (text == "eps") {
            return Scalar::bottom(sr);
        }
        if (text == "e") {
            return Scalar::top(sr);
        }
        throw input_error("boolean scalar must be \"eps\" or \"e\", got '" + std::string(text) + "'");
    case SemiringKind::rmax:
    case SemiringKind::nmax:
        if (text == "-inf") {
            return Scalar::bottom(sr);
        }
        if (text == "+inf") {
            return Scalar::top(sr);
        }
        return Scalar::finite(sr, parse_rational(text));
    case SemiringKind::matrix: break;
    }
    // "[[a,b],[c,d]]": brackets only delimit rows; entries are read in order.
    std::vector<Scalar> entries;
    std::string token;
    for (const char c : text) {
        if (c == '[' || c == ']' || c == ',' || c == ' ') {
            if (!token.empty()) {
                entries.push_back(parse_scalar(SemiringId::rmax(), token));
                token.clear();
            }
        } else {
            token.push_back(c);
        }
    }
    if (!token.empty()) {
        entries.push_back(parse_scalar(SemiringId::rmax(), token));
    }
    if (entries.size() != sr.dim() * sr.dim()) {
        throw input_error("matrix scalar '" + std::string(text) + "' has the wrong number of entries");
    }
    return Scalar::matrix(sr.dim(), std::move(entries));
}

Phi::Phi(Scalar value) : value_(std::move(value)), invertible_(inverse(value_).has_value()) {
    if (value_.semiring().kind() == SemiringKind::boolean && !value_.is_bottom()) {
        throw input_error("boolean phi must be eps");
    }
}

Phi Phi::default_for(SemiringId sr) {
    switch (sr.kind()) {
    case SemiringKind::boolean: return Phi(Scalar::bottom(sr));
    case SemiringKind::rmax:
    case SemiringKind::nmax: return Phi(Scalar::finite(sr, Rational(0)));
    case SemiringKind::matrix: break;
    }
    return diagonal_matrix(sr.dim(), Scalar::rmax(0));
}

Phi Phi::diagonal_matrix(std::size_t n, const Scalar& phi) {
    require_same_semiring(phi.semiring(), SemiringId::rmax(), "diagonal phi");
    std::vector<Scalar> e(n * n, Scalar::top(SemiringId::rmax()));
    for (std::size_t i = 0; i < n; ++i) {
        e[i * n + i] = phi;
    }
    return Phi(Scalar::matrix(n, std::move(e)));
}

} // namespace residua
