#include "pfh/orbit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

namespace pfh {

static void check_slope(int p, int q) {
    if (q < 1 || p < 0 || p > q)
        throw std::invalid_argument("slope orbit: need 0 <= p/q <= 1 with q >= 1");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("slope orbit: p and q must be coprime");
}

OrbitKind OrbitKind::slope_elliptic(int p, int q) {
    check_slope(p, q);
    return {OrbitTag::SlopeElliptic, p, q, {}};
}
OrbitKind OrbitKind::slope_hyperbolic(int p, int q) {
    check_slope(p, q);
    return {OrbitTag::SlopeHyperbolic, p, q, {}};
}
OrbitKind OrbitKind::morse_positive(std::string label) {
    return {OrbitTag::MorsePositive, 0, 1, std::move(label)};
}
OrbitKind OrbitKind::morse_negative(std::string label) {
    return {OrbitTag::MorseNegative, 0, 1, std::move(label)};
}
OrbitKind OrbitKind::morse_saddle(std::string label) {
    return {OrbitTag::MorseSaddle, 0, 1, std::move(label)};
}

std::strong_ordering OrbitKind::operator<=>(const OrbitKind& o) const {
    if (is_slope() != o.is_slope())
        return is_slope() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (is_slope()) {
        // slope descending: p/q > p'/q'  <=>  p*q' > p'*q
        long long lhs = static_cast<long long>(p) * o.q;
        long long rhs = static_cast<long long>(o.p) * q;
        if (lhs != rhs) return rhs <=> lhs;
        if (tag != o.tag) return tag <=> o.tag;  // elliptic before hyperbolic
        return std::strong_ordering::equal;
    }
    if (tag != o.tag) return tag <=> o.tag;
    return label.compare(o.label) <=> 0;
}

std::string OrbitKind::to_string() const {
    switch (tag) {
        case OrbitTag::SlopeElliptic:
            if (q == 1) return p == 0 ? "e0" : "e1";
            return "e[" + std::to_string(p) + "/" + std::to_string(q) + "]";
        case OrbitTag::SlopeHyperbolic:
            if (q == 1) return p == 0 ? "h0" : "h1";
            return "h[" + std::to_string(p) + "/" + std::to_string(q) + "]";
        case OrbitTag::MorsePositive: return "e-:" + label;
        case OrbitTag::MorseNegative: return "e+:" + label;
        case OrbitTag::MorseSaddle: return "h:" + label;
    }
    return {};
}

std::vector<OrbitKind> MorseConfig::roster() const {
    if (n_positive < 0 || n_negative < 0 || n_saddle < 0)
        throw std::invalid_argument("morse config: counts must be nonnegative");
    std::vector<OrbitKind> out;
    for (int i = 0; i < n_positive; ++i)
        out.push_back(OrbitKind::morse_positive("a" + std::to_string(i)));
    for (int i = 0; i < n_negative; ++i)
        out.push_back(OrbitKind::morse_negative("b" + std::to_string(i)));
    for (int i = 0; i < n_saddle; ++i)
        out.push_back(OrbitKind::morse_saddle("c" + std::to_string(i)));
    return out;
}

OrbitSet::OrbitSet(std::vector<std::pair<OrbitKind, int>> entries)
    : entries_(std::move(entries)) {
    for (const auto& [kind, mult] : entries_)
        if (mult < 1) throw std::invalid_argument("orbit set: multiplicity must be >= 1");
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicates
    std::vector<std::pair<OrbitKind, int>> merged;
    for (auto& e : entries_) {
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(e);
    }
    entries_ = std::move(merged);
}

int OrbitSet::degree() const {
    int d = 0;
    for (const auto& [kind, mult] : entries_) d += mult * kind.degree();
    return d;
}

bool OrbitSet::is_ech_generator() const {
    for (const auto& [kind, mult] : entries_)
        if (kind.is_hyperbolic() && mult > 1) return false;
    return true;
}

std::string OrbitSet::to_string() const {
    if (entries_.empty()) return "empty";
    std::string out;
    for (const auto& [kind, mult] : entries_) {
        if (!out.empty()) out += ' ';
        out += kind.to_string();
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

std::vector<OrbitKind> slope_roster(int Q) {
    std::vector<OrbitKind> roster;
    for (int q = 1; q <= Q; ++q)
        for (int p = 0; p <= q; ++p)
            if (std::gcd(p, q) == 1) {
                roster.push_back(OrbitKind::slope_elliptic(p, q));
                roster.push_back(OrbitKind::slope_hyperbolic(p, q));
            }
    std::sort(roster.begin(), roster.end());
    return roster;
}

namespace {

void extend(const std::vector<OrbitKind>& roster, std::size_t i, int remaining,
            std::vector<std::pair<OrbitKind, int>>& prefix,
            std::vector<OrbitSet>& out, std::size_t cap) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        if (out.size() > cap)
            throw std::length_error("enumerate_generators: cap exceeded");
        return;
    }
    if (i == roster.size()) return;
    const OrbitKind& kind = roster[i];
    int unit = kind.degree();
    int max_mult = kind.is_hyperbolic() ? 1 : remaining / unit;
    extend(roster, i + 1, remaining, prefix, out, cap);  // skip this orbit
    for (int m = 1; m <= max_mult && m * unit <= remaining; ++m) {
        prefix.emplace_back(kind, m);
        extend(roster, i + 1, remaining - m * unit, prefix, out, cap);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<OrbitSet> enumerate_generators(int Q, const MorseConfig& morse,
                                           std::size_t cap) {
    if (Q < 0) throw std::domain_error("enumerate_generators: Q must be >= 0");
    std::vector<OrbitKind> roster = slope_roster(Q);
    auto interior = morse.roster();
    roster.insert(roster.end(), interior.begin(), interior.end());
    std::vector<OrbitSet> out;
    std::vector<std::pair<OrbitKind, int>> prefix;
    extend(roster, 0, Q, prefix, out, cap);
    std::sort(out.begin(), out.end());
    return out;
}

EllipticClass classify_elliptic(double theta, int q, int Q) {
    if (Q < 1 || q < 1) throw std::domain_error("classify_elliptic: need q, Q >= 1");
    if (q > Q) throw std::domain_error("classify_elliptic: q exceeds degree bound");
    double frac = theta - std::floor(theta);  // in [0, 1)
    double band = static_cast<double>(q) / Q;
    if (frac > 0.0 && frac < band) return EllipticClass::QPositive;
    if (frac > 1.0 - band && frac < 1.0) return EllipticClass::QNegative;
    return EllipticClass::Neither;
}

// --- orbit-set grammar ------------------------------------------------------

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }
    int integer() {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", start);
        long long v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000) throw ParseError("integer too large", start);
        }
        return static_cast<int>(v);
    }
    std::string ident() {
        std::size_t start = pos;
        while (!done() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                           text[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected identifier", start);
        return text.substr(start, pos - start);
    }
};

OrbitKind parse_kind(Cursor& c) {
    std::size_t start = c.pos;
    char head = c.peek();
    if (head != 'e' && head != 'h')
        throw ParseError("expected orbit kind starting with 'e' or 'h'", start);
    ++c.pos;
    char next = c.peek();
    if (head == 'e' && (next == '+' || next == '-')) {
        ++c.pos;
        if (!c.eat(':')) throw ParseError("expected ':' after Morse kind", c.pos);
        std::string label = c.ident();
        return next == '+' ? OrbitKind::morse_negative(label)
                           : OrbitKind::morse_positive(label);
    }
    if (head == 'h' && next == ':') {
        ++c.pos;
        return OrbitKind::morse_saddle(c.ident());
    }
    if (next == '0' || next == '1') {  // aliases e0 e1 h0 h1
        ++c.pos;
        int p = next - '0';
        return head == 'e' ? OrbitKind::slope_elliptic(p, 1)
                           : OrbitKind::slope_hyperbolic(p, 1);
    }
    if (next == '[') {
        ++c.pos;
        int p = c.integer();
        if (!c.eat('/')) throw ParseError("expected '/' in slope", c.pos);
        int q = c.integer();
        if (!c.eat(']')) throw ParseError("expected ']' after slope", c.pos);
        return head == 'e' ? OrbitKind::slope_elliptic(p, q)
                           : OrbitKind::slope_hyperbolic(p, q);
    }
    throw ParseError("malformed orbit kind", start);
}

}  // namespace

OrbitSet parse_orbitset(const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    if (text.compare(c.pos, 5, "empty") == 0) {
        c.pos += 5;
        c.skip_ws();
        if (!c.done()) throw ParseError("trailing input after 'empty'", c.pos);
        return OrbitSet{};
    }
    std::vector<std::pair<OrbitKind, int>> entries;
    while (!c.done()) {
        OrbitKind kind = parse_kind(c);
        int mult = 1;
        if (c.eat('^')) mult = c.integer();
        if (mult < 1) throw std::invalid_argument("orbit multiplicity must be >= 1");
        entries.emplace_back(std::move(kind), mult);
        std::size_t before = c.pos;
        c.skip_ws();
        if (!c.done() && before == c.pos)
            throw ParseError("expected whitespace between terms", c.pos);
    }
    if (entries.empty()) throw ParseError("empty input", 0);
    return OrbitSet(std::move(entries));
}

}  // namespace pfh
