#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "verlinde/nslattice.hpp"
#include "verlinde/semihom.hpp"
#include "verlinde/verlinde.hpp"

namespace verlinde {

using json = nlohmann::ordered_json;

inline json to_json(const MukaiVector& v) {
    return json::array({v.r, v.k, v.chi});
}

inline json to_json(const NsClass& L) {
    return json::array(
        {rat_to_string(L.u), rat_to_string(L.v), rat_to_string(L.h)});
}

inline json to_json(const Triple& P) {
    return json::array(
        {rat_to_string(P.u), rat_to_string(P.v), rat_to_string(P.h)});
}

inline json to_json(const AssumptionReport& a) {
    json c;
    c["primitive_v"] = a.primitive_v;
    c["primitive_w"] = a.primitive_w;
    c["d_v_odd_positive"] = a.d_v_odd_positive;
    c["d_w_odd_positive"] = a.d_w_odd_positive;
    c["orthogonal"] = a.orthogonal;
    c["t_positive"] = a.t_positive;
    c["s_negative"] = a.s_negative;
    c["pairing_identity"] = a.pairing_identity;
    c["t_identity"] = a.t_identity;
    if (a.rank1_shape) c["rank1_slope_bound"] = a.rank1_slope_bound;
    return c;
}

// Big integers are emitted as decimal strings so JSON consumers never face
// values beyond 64 bits.
inline json to_json(const DecompositionTable& t) {
    json j;
    j["variant"] = variant_name(t.variant);
    j["v"] = to_json(t.v);
    j["w"] = to_json(t.w);
    j["d_v"] = to_decimal(t.d_v);
    j["d_w"] = to_decimal(t.d_w);
    j["delta"] = t.delta;
    j["slope"] = to_json(t.slope);
    if (t.has_index_pair)
        j["index_pair"] = json::array(
            {to_decimal(t.index_pair.first), to_decimal(t.index_pair.second)});
    j["summand_rank"] = to_decimal(t.summand_rank);
    json entries = json::array();
    for (const auto& e : t.entries) {
        json row;
        row["order"] = e.order;
        row["count"] = to_decimal(e.count);
        row["multiplicity"] = to_decimal(e.multiplicity);
        entries.push_back(row);
    }
    j["entries"] = entries;
    j["total_rank"] = to_decimal(t.total_rank);
    json checks = to_json(t.assumptions);
    checks["conjectural"] = t.conjectural;
    j["checks"] = checks;
    return j;
}

inline std::string table_to_csv(const DecompositionTable& t) {
    std::ostringstream os;
    os << "order,count,multiplicity\n";
    for (const auto& e : t.entries)
        os << e.order << ',' << to_decimal(e.count) << ','
           << to_decimal(e.multiplicity) << '\n';
    return os.str();
}

inline std::string table_to_text(const DecompositionTable& t) {
    std::ostringstream os;
    os << "variant: " << variant_name(t.variant) << "\n"
       << "v: [" << t.v.r << ", " << t.v.k << ", " << t.v.chi << "]\n"
       << "w: [" << t.w.r << ", " << t.w.k << ", " << t.w.chi << "]\n"
       << "d_v: " << to_decimal(t.d_v) << "  d_w: " << to_decimal(t.d_w) << "\n"
       << "delta: " << t.delta << "\n"
       << "slope: (" << rat_to_string(t.slope.u) << ", "
       << rat_to_string(t.slope.v) << ", " << rat_to_string(t.slope.h) << ")\n";
    if (t.has_index_pair)
        os << "index pair: (" << to_decimal(t.index_pair.first) << ", "
           << to_decimal(t.index_pair.second) << ")\n";
    os << "summand rank: " << to_decimal(t.summand_rank) << "\n"
       << "order  count  multiplicity\n";
    for (const auto& e : t.entries)
        os << e.order << "  " << to_decimal(e.count) << "  "
           << to_decimal(e.multiplicity) << "\n";
    os << "total rank: " << to_decimal(t.total_rank) << "\n"
       << "conjectural: " << (t.conjectural ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace verlinde
