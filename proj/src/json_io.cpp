#include "balance/json_io.hpp"

namespace balance {

Json to_json(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

Json to_json(const Placement& p) {
    Json out = Json::array();
    for (Vertex u : p.facilities()) out.push_back(u);
    return out;
}

namespace {
template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? to_json(*v) : Json(nullptr);
}
}  // namespace

Json to_json(const ScoreReport& r) {
    Json scores = Json::array();
    for (const auto& s : r.scores) scores.push_back(to_json(s));
    return Json{{"n", r.n},
                {"k", r.k},
                {"scores", scores},
                {"z", optional_json(r.z)},
                {"balanced", r.balanced ? Json(*r.balanced) : Json(nullptr)}};
}

Json to_json(const BalancednessVerdict& v) {
    return Json{{"balanced", v.balanced},
                {"witness", optional_json(v.witness)},
                {"witness_min_score", optional_json(v.witness_min_score)},
                {"witness_max_score", optional_json(v.witness_max_score)},
                {"placements_examined", v.placements_examined},
                {"total_placements", v.total_placements}};
}

Json to_json(const UnbalancednessAnswer& a) {
    return Json{{"answer", a.answer},
                {"witness", optional_json(a.witness)},
                {"witness_min_score", optional_json(a.witness_min_score)},
                {"placements_examined", a.placements_examined},
                {"total_placements", a.total_placements}};
}

Json to_json(const PlacementCount& c) { return Json{{"violating", c.violating}, {"total", c.total}}; }

namespace {
int condition_index(TraversalReject r) {
    switch (r) {
        case TraversalReject::none: return 0;
        case TraversalReject::infinite_radius: return -1;
        case TraversalReject::full_reach: return 1;
        case TraversalReject::ball_too_large: return 2;
    }
    return 0;
}
}  // namespace

Json to_json(const TraversalCertificate& c) {
    Json reason = nullptr;
    if (!c.accept) {
        reason = Json{{"condition", condition_index(c.reason)},
                      {"label", to_string(c.reason)},
                      {"vertex", c.witness ? Json(*c.witness) : Json(nullptr)}};
    }
    return Json{{"n", c.n},
                {"k", c.k},
                {"delta", to_json(c.delta)},
                {"radius", c.reason == TraversalReject::infinite_radius ? Json(nullptr) : Json(c.radius)},
                {"max_inner_ball", c.max_inner_ball},
                {"min_outer_ball", c.min_outer_ball},
                {"inner_ball_limit", to_json(c.inner_ball_limit())},
                {"accept", c.accept},
                {"reason", reason}};
}

TraversalCertificate traversal_certificate_from_json(const Json& j) {
    TraversalCertificate c;
    c.n = j.at("n").get<std::size_t>();
    c.k = j.at("k").get<std::size_t>();
    c.delta = rational_from_json(j.at("delta"));
    c.radius = j.at("radius").is_null() ? 0 : j.at("radius").get<std::size_t>();
    c.max_inner_ball = j.at("max_inner_ball").get<std::uint64_t>();
    c.min_outer_ball = j.at("min_outer_ball").get<std::uint64_t>();
    c.accept = j.at("accept").get<bool>();
    const auto& reason = j.at("reason");
    if (!reason.is_null()) {
        switch (reason.at("condition").get<int>()) {
            case -1: c.reason = TraversalReject::infinite_radius; break;
            case 1: c.reason = TraversalReject::full_reach; break;
            case 2: c.reason = TraversalReject::ball_too_large; break;
            default: throw std::invalid_argument("unknown traversal reject condition");
        }
        if (!reason.at("vertex").is_null()) c.witness = reason.at("vertex").get<Vertex>();
    }
    return c;
}

Json to_json(const SpectralCertificate& c) {
    return Json{{"n", c.n},
                {"m", c.m},
                {"expected_degree", c.expected_degree},
                {"min_degree", c.min_degree},
                {"max_degree", c.max_degree},
                {"regularity_tolerance", c.regularity_tolerance},
                {"roughly_regular", c.roughly_regular},
                {"lambda2_estimate", c.lambda2_estimate ? Json(*c.lambda2_estimate) : Json(nullptr)},
                {"threshold", c.threshold},
                {"epsilon", c.epsilon},
                {"c_pow", c.c_pow},
                {"iterations", c.iterations},
                {"seed", c.seed},
                {"accept", c.accept},
                {"reject_step", c.reject_step == 0 ? Json(nullptr) : Json(c.reject_step)}};
}

Json to_json(const AcceptanceEstimate& e) {
    return Json{{"trials", e.trials},
                {"accepts", e.accepts},
                {"probability", to_json(e.probability)},
                {"probability_value", e.probability.to_double()},
                {"threshold", e.threshold},
                {"exceeds_threshold", e.exceeds_threshold},
                {"seed", e.seed}};
}

Json to_json(const ReducedInstance& r) {
    Json bags = Json::array();
    for (auto [b, e] : r.bag_ranges) bags.push_back(Json::array({b, e}));
    return Json{{"k", r.k},
                {"s", to_json(r.s)},
                {"root", r.root},
                {"original_ids", r.original_ids},
                {"bag_ranges", bags},
                {"bag_size", r.bag_size},
                {"guarantees_void", r.guarantees_void},
                {"vertices", r.graph.num_vertices()},
                {"edges", r.graph.num_edges()}};
}

Json to_json(const DegreeStats& s) {
    return Json{{"min_degree", s.min_degree},
                {"max_degree", s.max_degree},
                {"mean_degree", s.mean_degree},
                {"target_degree", s.target_degree},
                {"tolerance", s.tolerance},
                {"roughly_regular", s.roughly_regular}};
}

}  // namespace balance
