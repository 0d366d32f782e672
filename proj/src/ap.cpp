#include "apcover/ap.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace apcover {

Ap::Ap(Integer first, Integer diff, std::int64_t length)
    : first_(std::move(first)), diff_(std::move(diff)), len_(length) {
    if (len_ < 1) throw std::invalid_argument("Ap: length must be >= 1");
    if (len_ == 1 && diff_ != 0) throw std::invalid_argument("Ap: singleton must have difference 0");
    if (len_ >= 2 && diff_ <= 0) throw std::invalid_argument("Ap: difference must be positive");
}

bool Ap::contains(const Integer& v) const {
    if (len_ == 1) return v == first_;
    if (v < first_ || v > last()) return false;
    return (v - first_) % diff_ == 0;
}

std::vector<Integer> Ap::elements() const {
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(len_));
    Integer v = first_;
    for (std::int64_t i = 0; i < len_; ++i) {
        out.push_back(v);
        v += diff_;
    }
    return out;
}

bool Ap::operator<(const Ap& other) const {
    if (first_ != other.first_) return first_ < other.first_;
    if (diff_ != other.diff_) return diff_ < other.diff_;
    return len_ < other.len_;
}

std::string Ap::to_string() const {
    std::ostringstream os;
    os << first_ << " " << diff_ << " " << len_;
    return os.str();
}

bool is_ap(const std::vector<Integer>& sorted_values) {
    if (sorted_values.size() <= 2) return true;
    Integer d = sorted_values[1] - sorted_values[0];
    for (std::size_t i = 2; i < sorted_values.size(); ++i) {
        if (sorted_values[i] - sorted_values[i - 1] != d) return false;
    }
    return true;
}

Ap make_ap(const Instance& X, const Integer& a, const Integer& d) {
    if (!X.contains(a)) throw std::invalid_argument("make_ap: start element not in instance");
    if (d <= 0) throw std::invalid_argument("make_ap: difference must be positive");
    Integer lo = a;
    while (X.contains(lo - d)) lo -= d;
    Integer hi = a;
    while (X.contains(hi + d)) hi += d;
    Integer span = (hi - lo) / d;
    std::int64_t len = static_cast<std::int64_t>(span) + 1;
    if (len == 1) return Ap::singleton(lo);
    return Ap(lo, d, len);
}

std::optional<Ap> intersect(const Ap& a, const Ap& b) {
    if (a.length() == 1) {
        if (b.contains(a.first())) return a;
        return std::nullopt;
    }
    if (b.length() == 1) {
        if (a.contains(b.first())) return b;
        return std::nullopt;
    }
    // Solve x = a.first (mod a.diff), x = b.first (mod b.diff).
    Integer g = gcd(a.diff(), b.diff());
    Integer delta = b.first() - a.first();
    if (delta % g != 0) return std::nullopt;
    Integer step = a.diff() / g * b.diff();  // lcm
    Integer m = b.diff() / g;
    Integer t = mod_floor(delta / g * mod_inverse(a.diff() / g, m), m);
    Integer x0 = a.first() + a.diff() * t;  // smallest common value >= a.first d
    Integer lo = std::max(a.first(), b.first());
    Integer hi = std::min(a.last(), b.last());
    if (lo > hi) return std::nullopt;
    Integer start = x0 + ceil_div(lo - x0, step) * step;
    if (start > hi) return std::nullopt;
    Integer count = (hi - start) / step + 1;
    std::int64_t len = static_cast<std::int64_t>(count);
    if (len == 1) return Ap::singleton(start);
    return Ap(start, step, len);
}

std::optional<Ap> prefix_meet(const Integer& start, const Integer& diff, const Instance& X,
                              const std::set<Integer>& blocked) {
    if (diff < 0) throw std::invalid_argument("prefix_meet: difference must be >= 0");
    auto excluded = [&](const Integer& v) { return !X.contains(v) || blocked.count(v) != 0; };
    if (excluded(start)) return std::nullopt;
    if (diff == 0) return Ap::singleton(start);
    Integer v = start + diff;
    std::int64_t len = 1;
    while (!excluded(v)) {
        ++len;
        v += diff;
    }
    if (len == 1) return Ap::singleton(start);
    return Ap(start, diff, len);
}

std::vector<Ap> enumerate_maximal_aps(const Instance& X) {
    const std::size_t n = X.size();
    std::set<Ap> seen;
    std::vector<bool> in_multi(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Ap ap = make_ap(X, X[i], X[j] - X[i]);
            if (!seen.insert(ap).second) continue;
            for (const Integer& v : ap.elements()) {
                in_multi[*X.index_of(v)] = true;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_multi[i]) seen.insert(Ap::singleton(X[i]));
    }
    return {seen.begin(), seen.end()};
}

std::vector<Ap> enumerate_all_aps(const Instance& X) {
    std::set<Ap> seen;
    for (std::size_t i = 0; i < X.size(); ++i) seen.insert(Ap::singleton(X[i]));
    for (const Ap& m : enumerate_maximal_aps(X)) {
        for (std::int64_t s = 0; s < m.length(); ++s) {
            for (std::int64_t len = 2; s + len <= m.length(); ++len) {
                seen.insert(Ap(m.element(s), m.diff(), len));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

bool has_three_term_ap(const Instance& X) {
    const std::size_t n = X.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (X.contains(2 * X[j] - X[i])) return true;
        }
    }
    return false;
}

VerifyResult verify_solution(const Instance& X, const Solution& s) {
    std::vector<int> owner(X.size(), -1);
    for (std::size_t a = 0; a < s.aps.size(); ++a) {
        Integer v = s.aps[a].first();
        for (std::int64_t i = 0; i < s.aps[a].length(); ++i) {
            auto idx = X.index_of(v);
            if (!idx) {
                std::ostringstream os;
                os << "not contained: AP #" << a << " element " << v << " is outside the instance";
                return {false, os.str()};
            }
            if (s.kind == CoverKind::exact_cover && owner[*idx] >= 0 &&
                owner[*idx] != static_cast<int>(a)) {
                std::ostringstream os;
                os << "overlap: element " << v << " covered by AP #" << owner[*idx] << " and AP #" << a;
                return {false, os.str()};
            }
            owner[*idx] = static_cast<int>(a);
            v += s.aps[a].diff();
        }
    }
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (owner[i] < 0) {
            std::ostringstream os;
            os << "uncovered: element " << X[i] << " is in no AP";
            return {false, os.str()};
        }
    }
    return {true, ""};
}

}  // namespace apcover
