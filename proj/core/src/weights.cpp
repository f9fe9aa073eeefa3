#include "editdist/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace editdist {

namespace {

using Piece = std::pair<double, double>;

// Drops pieces that do not change the function value. The implicit value
// before the first breakpoint is 0.
std::vector<Piece> canonical_pieces(std::vector<Piece> pieces) {
    std::vector<Piece> out;
    double current = 0.0;
    for (const auto& [t, v] : pieces) {
        if (v == current) continue;
        out.emplace_back(t, v);
        current = v;
    }
    return out;
}

}  // namespace

Weight Weight::real(double v) {
    Weight w;
    w.kind_ = Kind::Real;
    w.real_ = v;
    return w;
}

Weight Weight::tuple(std::vector<Weight> parts) {
    Weight w;
    w.kind_ = Kind::Tuple;
    w.parts_ = std::move(parts);
    return w;
}

Weight Weight::step(std::vector<Piece> pieces) {
    Weight w;
    w.kind_ = Kind::Step;
    w.pieces_ = canonical_pieces(std::move(pieces));
    return w;
}

double Weight::as_real() const {
    if (!is_real()) throw SpaceMismatchError("weight is not a real");
    return real_;
}

const std::vector<Weight>& Weight::parts() const {
    if (!is_tuple()) throw SpaceMismatchError("weight is not a tuple");
    return parts_;
}

const std::vector<Piece>& Weight::pieces() const {
    if (!is_step()) throw SpaceMismatchError("weight is not a step function");
    return pieces_;
}

double Weight::step_value_at(double x) const {
    const auto& ps = pieces();
    double value = 0.0;
    for (const auto& [t, v] : ps) {
        if (t > x) break;
        value = v;
    }
    return value;
}

Space Space::reals(double tolerance) {
    Space s;
    s.kind_ = Kind::Real;
    s.tolerance_ = tolerance;
    return s;
}

Space Space::product(std::vector<Space> factors, std::vector<double> scales, double tolerance) {
    if (factors.empty()) throw Error("product space needs at least one factor");
    if (scales.empty()) scales.assign(factors.size(), 1.0);
    if (scales.size() != factors.size())
        throw Error("product space: scales/factors size mismatch");
    for (double s : scales)
        if (!(s > 0.0)) throw Error("product space: scale weights must be positive");
    Space s;
    s.kind_ = Kind::Product;
    s.tolerance_ = tolerance;
    s.factors_ = std::move(factors);
    s.scales_ = std::move(scales);
    return s;
}

Space Space::step_functions(double lo, double hi, double tolerance) {
    if (!(lo < hi)) throw Error("step function space: empty interval");
    Space s;
    s.kind_ = Kind::Step;
    s.tolerance_ = tolerance;
    s.lo_ = lo;
    s.hi_ = hi;
    return s;
}

bool Space::same_space(const Space& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Real:
            return true;
        case Kind::Step:
            return lo_ == other.lo_ && hi_ == other.hi_;
        case Kind::Product: {
            if (factors_.size() != other.factors_.size()) return false;
            if (scales_ != other.scales_) return false;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                if (!factors_[i].same_space(other.factors_[i])) return false;
            return true;
        }
    }
    return false;
}

Weight Space::zero() const {
    switch (kind_) {
        case Kind::Real:
            return Weight::real(0.0);
        case Kind::Step:
            return Weight::step({});
        case Kind::Product: {
            std::vector<Weight> parts;
            parts.reserve(factors_.size());
            for (const auto& f : factors_) parts.push_back(f.zero());
            return Weight::tuple(std::move(parts));
        }
    }
    throw Error("unreachable");
}

void Space::check(const Weight& w) const {
    switch (kind_) {
        case Kind::Real: {
            if (!w.is_real()) throw SpaceMismatchError("expected a real weight");
            double v = w.as_real();
            if (!(v >= 0.0) || !std::isfinite(v))
                throw SpaceMismatchError("real weight must be finite and >= 0");
            return;
        }
        case Kind::Product: {
            if (!w.is_tuple()) throw SpaceMismatchError("expected a tuple weight");
            if (w.parts().size() != factors_.size())
                throw SpaceMismatchError("tuple arity does not match the product space");
            for (std::size_t i = 0; i < factors_.size(); ++i) factors_[i].check(w.parts()[i]);
            return;
        }
        case Kind::Step: {
            if (!w.is_step()) throw SpaceMismatchError("expected a step-function weight");
            double prev = lo_ - 1.0;
            bool first = true;
            for (const auto& [t, v] : w.pieces()) {
                if (!std::isfinite(t) || !std::isfinite(v))
                    throw SpaceMismatchError("step piece must be finite");
                if (t < lo_ || t > hi_)
                    throw SpaceMismatchError("step breakpoint outside the interval");
                if (!first && !(t > prev))
                    throw SpaceMismatchError("step breakpoints must be strictly increasing");
                if (!(v >= 0.0)) throw SpaceMismatchError("step values must be >= 0");
                prev = t;
                first = false;
            }
            return;
        }
    }
}

Weight Space::combine(const Weight& a, const Weight& b) const {
    check(a);
    check(b);
    switch (kind_) {
        case Kind::Real:
            return Weight::real(a.as_real() + b.as_real());
        case Kind::Product: {
            std::vector<Weight> parts;
            parts.reserve(factors_.size());
            for (std::size_t i = 0; i < factors_.size(); ++i)
                parts.push_back(factors_[i].combine(a.parts()[i], b.parts()[i]));
            return Weight::tuple(std::move(parts));
        }
        case Kind::Step: {
            // Merge breakpoint lists; values add pointwise.
            const auto& pa = a.pieces();
            const auto& pb = b.pieces();
            std::vector<Piece> merged;
            std::size_t i = 0, j = 0;
            double va = 0.0, vb = 0.0;
            while (i < pa.size() || j < pb.size()) {
                double t;
                if (j == pb.size() || (i < pa.size() && pa[i].first <= pb[j].first)) {
                    t = pa[i].first;
                } else {
                    t = pb[j].first;
                }
                if (i < pa.size() && pa[i].first == t) va = pa[i++].second;
                if (j < pb.size() && pb[j].first == t) vb = pb[j++].second;
                merged.emplace_back(t, va + vb);
            }
            return Weight::step(std::move(merged));
        }
    }
    throw Error("unreachable");
}

double Space::distance(const Weight& a, const Weight& b) const {
    check(a);
    check(b);
    switch (kind_) {
        case Kind::Real:
            return std::abs(a.as_real() - b.as_real());
        case Kind::Product: {
            double total = 0.0;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                total += scales_[i] * factors_[i].distance(a.parts()[i], b.parts()[i]);
            return total;
        }
        case Kind::Step: {
            // L1 distance: walk the merged breakpoints across [lo, hi].
            const auto& pa = a.pieces();
            const auto& pb = b.pieces();
            std::vector<double> cuts;
            cuts.push_back(lo_);
            for (const auto& [t, v] : pa) cuts.push_back(t);
            for (const auto& [t, v] : pb) cuts.push_back(t);
            cuts.push_back(hi_);
            std::sort(cuts.begin(), cuts.end());
            cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
            double total = 0.0;
            for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
                double seg = cuts[k + 1] - cuts[k];
                if (seg <= 0.0) continue;
                total += seg * std::abs(a.step_value_at(cuts[k]) - b.step_value_at(cuts[k]));
            }
            return total;
        }
    }
    throw Error("unreachable");
}

double Space::norm(const Weight& a) const { return distance(zero(), a); }

Space Space::infer(const Weight& w, double step_lo, double step_hi, double tolerance) {
    switch (w.kind()) {
        case Weight::Kind::Real:
            return Space::reals(tolerance);
        case Weight::Kind::Step:
            return Space::step_functions(step_lo, step_hi, tolerance);
        case Weight::Kind::Tuple: {
            std::vector<Space> factors;
            for (const auto& p : w.parts()) factors.push_back(infer(p, step_lo, step_hi, tolerance));
            return Space::product(std::move(factors), {}, tolerance);
        }
    }
    throw Error("unreachable");
}

std::string Space::describe() const {
    switch (kind_) {
        case Kind::Real:
            return "reals";
        case Kind::Step: {
            std::ostringstream os;
            os << "step[" << lo_ << "," << hi_ << "]";
            return os.str();
        }
        case Kind::Product: {
            std::ostringstream os;
            os << "product(";
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                if (i) os << ",";
                os << factors_[i].describe();
            }
            os << ")";
            return os.str();
        }
    }
    return "?";
}

namespace {

nlohmann::json weight_to_json_impl(const Weight& w, const Space& space) {
    nlohmann::json j;
    switch (w.kind()) {
        case Weight::Kind::Real:
            j["kind"] = "real";
            j["v"] = w.as_real();
            break;
        case Weight::Kind::Tuple: {
            j["kind"] = "tuple";
            auto arr = nlohmann::json::array();
            const auto& factors = space.factors();
            for (std::size_t i = 0; i < w.parts().size(); ++i) {
                const Space& f = i < factors.size() ? factors[i] : space;
                arr.push_back(weight_to_json_impl(w.parts()[i], f));
            }
            j["v"] = std::move(arr);
            break;
        }
        case Weight::Kind::Step: {
            j["kind"] = "step";
            j["interval"] = {space.interval_lo(), space.interval_hi()};
            auto arr = nlohmann::json::array();
            for (const auto& [t, v] : w.pieces()) arr.push_back({t, v});
            j["pieces"] = std::move(arr);
            break;
        }
    }
    return j;
}

struct ParsedWeight {
    Weight weight;
    double step_lo = 0.0;
    double step_hi = 1.0;
    bool has_interval = false;
};

ParsedWeight weight_from_json_impl(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("weight JSON must be an object with a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    ParsedWeight out;
    if (kind == "real") {
        out.weight = Weight::real(j.at("v").get<double>());
    } else if (kind == "tuple") {
        std::vector<Weight> parts;
        for (const auto& e : j.at("v")) {
            ParsedWeight p = weight_from_json_impl(e);
            if (p.has_interval) {
                out.step_lo = p.step_lo;
                out.step_hi = p.step_hi;
                out.has_interval = true;
            }
            parts.push_back(std::move(p.weight));
        }
        out.weight = Weight::tuple(std::move(parts));
    } else if (kind == "step") {
        std::vector<std::pair<double, double>> pieces;
        for (const auto& e : j.at("pieces"))
            pieces.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
        out.weight = Weight::step(std::move(pieces));
        if (j.contains("interval")) {
            out.step_lo = j.at("interval").at(0).get<double>();
            out.step_hi = j.at("interval").at(1).get<double>();
            out.has_interval = true;
        }
    } else {
        throw ParseError("unknown weight kind: " + kind);
    }
    return out;
}

}  // namespace

std::string weight_to_json(const Weight& w, const Space& space) {
    return weight_to_json_impl(w, space).dump();
}

Weight weight_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad weight JSON: ") + e.what());
    }
    return weight_from_json_impl(j).weight;
}

std::pair<Weight, Space> weight_and_space_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad weight JSON: ") + e.what());
    }
    ParsedWeight p = weight_from_json_impl(j);
    Space s = Space::infer(p.weight, p.step_lo, p.step_hi);
    return {std::move(p.weight), std::move(s)};
}

}  // namespace editdist
