#include "ordeg.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "constructions.hpp"
#include "edgelist.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "metrics.hpp"

struct ordeg_graph {
    ordeg::Graph g;
};

struct ordeg_plan_list {
    std::vector<ordeg::ConstructionPlan> plans;
};

namespace {

thread_local std::string t_last_error;

void set_error(const char* msg) { t_last_error = msg; }

template <typename F>
ordeg_status guarded(F&& f) noexcept {
    try {
        return f();
    } catch (const ordeg::parse_error& e) {
        set_error(e.what());
        return ORDEG_E_PARSE;
    } catch (const ordeg::limit_error& e) {
        set_error(e.what());
        return ORDEG_E_LIMIT;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return ORDEG_E_DOMAIN;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return ORDEG_E_INVALID;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return ORDEG_E_NOMEM;
    } catch (const std::exception& e) {
        set_error(e.what());
        return ORDEG_E_INVALID;
    }
}

ordeg_status require(bool ok, const char* msg) {
    if (!ok) {
        set_error(msg);
        return ORDEG_E_INVALID;
    }
    return ORDEG_OK;
}

ordeg_status copy_string(const std::string& s, char* buf, size_t buflen) {
    if (buf == nullptr || buflen == 0 || s.size() + 1 > buflen) {
        set_error(("buffer too small; need " + std::to_string(s.size() + 1) + " bytes").c_str());
        return ORDEG_E_BUFFER;
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return ORDEG_OK;
}

template <size_t N>
ordeg_status copy_fixed(const std::string& s, char (&buf)[N]) {
    return copy_string(s, buf, N);
}

void fill_metrics(const ordeg::MetricsReport& m, ordeg_metrics* out) {
    out->order = m.order;
    out->edge_count = m.edge_count;
    out->min_degree = m.degrees.min_degree;
    out->max_degree = m.degrees.max_degree;
    out->is_regular = m.degrees.is_regular ? 1 : 0;
    out->is_connected = m.is_connected ? 1 : 0;
    out->has_diameter = m.diameter.has_value() ? 1 : 0;
    out->diameter = m.diameter.value_or(0);
    out->has_girth = m.girth.has_value() ? 1 : 0;
    out->girth = m.girth.value_or(0);
    out->has_aspl = m.aspl.has_value() ? 1 : 0;
    out->aspl_num = m.aspl ? m.aspl->num : 0;
    out->aspl_den = m.aspl ? m.aspl->den : 1;
}

}  // namespace

extern "C" {

const char* ordeg_version(void) { return "1.0.0"; }

const char* ordeg_last_error(void) { return t_last_error.c_str(); }

ordeg_status ordeg_graph_build(uint64_t order, const uint32_t* endpoints, size_t edge_count, ordeg_graph** out) {
    if (ordeg_status s = require(out && (endpoints || edge_count == 0), "null argument")) return s;
    return guarded([&] {
        std::vector<ordeg::Edge> edges;
        edges.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        *out = new ordeg_graph{ordeg::Graph::from_edges(order, edges)};
        return ORDEG_OK;
    });
}

void ordeg_graph_free(ordeg_graph* g) { delete g; }

uint32_t ordeg_graph_order(const ordeg_graph* g) { return g ? g->g.order() : 0; }

uint64_t ordeg_graph_edge_count(const ordeg_graph* g) { return g ? g->g.edge_count() : 0; }

ordeg_status ordeg_graph_degree(const ordeg_graph* g, uint32_t v, uint32_t* out) {
    if (ordeg_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        *out = g->g.degree(v);
        return ORDEG_OK;
    });
}

ordeg_status ordeg_graph_neighbors(const ordeg_graph* g, uint32_t v, const uint32_t** out_ptr, uint32_t* out_len) {
    if (ordeg_status s = require(g && out_ptr && out_len, "null argument")) return s;
    return guarded([&] {
        const std::vector<ordeg::Vertex>& n = g->g.neighbors(v);
        *out_ptr = n.data();
        *out_len = static_cast<uint32_t>(n.size());
        return ORDEG_OK;
    });
}

ordeg_status ordeg_gen(const char* family, const uint64_t* params, size_t nparams, ordeg_graph** out) {
    if (ordeg_status s = require(family && out && (params || nparams == 0), "null argument")) return s;
    return guarded([&] {
        *out = new ordeg_graph{ordeg::build_family(family, {params, nparams})};
        return ORDEG_OK;
    });
}

ordeg_status ordeg_predict(const char* family, const uint64_t* params, size_t nparams, ordeg_prediction* out) {
    if (ordeg_status s = require(family && out && (params || nparams == 0), "null argument")) return s;
    return guarded([&] {
        ordeg::Prediction p = ordeg::predict_family(family, {params, nparams});
        out->order = p.order;
        out->max_degree = p.max_degree;
        out->has_diameter = p.diameter.has_value() ? 1 : 0;
        out->diameter = p.diameter.value_or(0);
        out->degree_is_bound = p.degree_is_bound ? 1 : 0;
        out->diameter_is_bound = p.diameter_is_bound ? 1 : 0;
        return ORDEG_OK;
    });
}

ordeg_status ordeg_duplicate_vertices(const ordeg_graph* base, int64_t target, uint32_t copies, int clique,
                                      ordeg_graph** out) {
    if (ordeg_status s = require(base && out, "null argument")) return s;
    return guarded([&] {
        ordeg::DuplicationPlan plan;
        if (target < 0)
            plan.target = ordeg::lowest_min_degree_vertex(base->g);
        else if (target >= base->g.order()) {
            set_error("duplicate: target out of range");
            return ORDEG_E_INVALID;
        } else
            plan.target = static_cast<ordeg::Vertex>(target);
        plan.copies = copies;
        plan.clique = clique != 0;
        *out = new ordeg_graph{ordeg::duplicate_vertices(base->g, plan)};
        return ORDEG_OK;
    });
}

ordeg_status ordeg_compute_metrics(const ordeg_graph* g, ordeg_metrics* out) {
    if (ordeg_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        fill_metrics(ordeg::compute_metrics(g->g), out);
        return ORDEG_OK;
    });
}

ordeg_status ordeg_bfs_distances(const ordeg_graph* g, uint32_t source, int32_t* out) {
    if (ordeg_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        std::vector<int32_t> d = ordeg::bfs_distances(g->g, source);
        std::memcpy(out, d.data(), d.size() * sizeof(int32_t));
        return ORDEG_OK;
    });
}

ordeg_status ordeg_oracle_all_pairs(const ordeg_graph* g, uint32_t cap, int32_t* out) {
    if (ordeg_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        std::vector<int32_t> d = ordeg::oracle_all_pairs(g->g, cap == 0 ? ordeg::kDefaultOracleCap : cap);
        std::memcpy(out, d.data(), d.size() * sizeof(int32_t));
        return ORDEG_OK;
    });
}

ordeg_status ordeg_moore_bound(uint32_t degree, uint32_t diameter, char* buf, size_t buflen) {
    return guarded([&] { return copy_string(ordeg::moore_bound(degree, diameter).str(), buf, buflen); });
}

ordeg_status ordeg_moore_ratio_pct(uint64_t order, uint32_t degree, uint32_t diameter, char* buf, size_t buflen) {
    return guarded(
        [&] { return copy_string(ordeg::moore_ratio_pct(ordeg::BigInt(order), degree, diameter), buf, buflen); });
}

ordeg_status ordeg_aspl_lower_bound(uint64_t order, uint64_t degree, uint64_t* num, uint64_t* den) {
    if (ordeg_status s = require(num && den, "null argument")) return s;
    return guarded([&] {
        ordeg::Rational r = ordeg::aspl_lower_bound(order, degree);
        *num = r.num;
        *den = r.den;
        return ORDEG_OK;
    });
}

ordeg_status ordeg_known_optimum(uint32_t degree, uint32_t diameter, int* kind, uint64_t* value) {
    if (ordeg_status s = require(kind && value, "null argument")) return s;
    return guarded([&] {
        ordeg::Optimum o = ordeg::known_optimum(degree, diameter);
        *kind = static_cast<int>(o.kind);
        *value = o.value;
        return ORDEG_OK;
    });
}

ordeg_status ordeg_construction_bounds(uint32_t degree, uint32_t diameter, ordeg_bound_report* out) {
    if (ordeg_status s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        ordeg::BoundReport r = ordeg::construction_lower_bounds(degree, diameter);
        *out = ordeg_bound_report{};
        if (ordeg_status s = copy_fixed(r.moore.str(), out->moore)) return s;
        out->optimum_kind = static_cast<int>(r.optimum.kind);
        out->optimum_value = r.optimum.value;
        out->has_brown = r.brown.has_value() ? 1 : 0;
        if (r.brown)
            if (ordeg_status s = copy_fixed(r.brown->str(), out->brown)) return s;
        out->has_de_bruijn = r.de_bruijn.has_value() ? 1 : 0;
        if (r.de_bruijn)
            if (ordeg_status s = copy_fixed(r.de_bruijn->str(), out->de_bruijn)) return s;
        out->has_power_of_two = r.power_of_two.has_value() ? 1 : 0;
        if (r.power_of_two)
            if (ordeg_status s = copy_fixed(r.power_of_two->str(), out->power_of_two)) return s;
        return ORDEG_OK;
    });
}

ordeg_status ordeg_plan(uint64_t order, uint64_t degree, ordeg_plan_list** out) {
    if (ordeg_status s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        *out = new ordeg_plan_list{ordeg::plan(order, degree)};
        return ORDEG_OK;
    });
}

void ordeg_plan_list_free(ordeg_plan_list* plans) { delete plans; }

size_t ordeg_plan_count(const ordeg_plan_list* plans) { return plans ? plans->plans.size() : 0; }

ordeg_status ordeg_plan_get(const ordeg_plan_list* plans, size_t index, ordeg_plan_info* out) {
    if (ordeg_status s = require(plans && out, "null argument")) return s;
    if (ordeg_status s = require(index < plans->plans.size(), "plan index out of range")) return s;
    return guarded([&] {
        const ordeg::ConstructionPlan& p = plans->plans[index];
        if (ordeg_status s = copy_fixed(p.family_name(), out->family)) return s;
        if (ordeg_status s = copy_fixed(p.params_string(), out->params)) return s;
        out->order = p.predicted_order;
        out->degree = p.predicted_degree;
        out->diameter = p.predicted_diameter;
        return ORDEG_OK;
    });
}

ordeg_status ordeg_plan_realize(const ordeg_plan_list* plans, size_t index, ordeg_graph** out_graph,
                                ordeg_metrics* out_metrics, int* out_pass) {
    if (ordeg_status s = require(plans && out_graph && out_pass, "null argument")) return s;
    if (ordeg_status s = require(index < plans->plans.size(), "plan index out of range")) return s;
    return guarded([&] {
        ordeg::CertifiedPlan c = ordeg::realize_and_certify(plans->plans[index]);
        if (out_metrics) fill_metrics(c.metrics, out_metrics);
        *out_pass = c.pass ? 1 : 0;
        *out_graph = new ordeg_graph{std::move(c.graph)};
        return ORDEG_OK;
    });
}

ordeg_status ordeg_best_order_table(uint64_t max_degree, ordeg_table_row* rows, size_t* out_count) {
    if (ordeg_status s = require(rows && out_count, "null argument")) return s;
    return guarded([&] {
        std::vector<ordeg::TableRow> table = ordeg::best_order_table(max_degree);
        for (size_t i = 0; i < table.size(); ++i) {
            rows[i].degree = table[i].degree;
            rows[i].order = table[i].order;
            if (ordeg_status s = copy_fixed(table[i].best.family_name(), rows[i].family)) return s;
            if (ordeg_status s = copy_fixed(table[i].best.params_string(), rows[i].params)) return s;
            ordeg::BigInt moore = ordeg::moore_bound(table[i].degree, 2);
            if (ordeg_status s = copy_fixed(moore.str(), rows[i].moore)) return s;
            std::string pct = ordeg::moore_ratio_pct(ordeg::BigInt(table[i].order), table[i].degree, 2);
            if (ordeg_status s = copy_fixed(pct, rows[i].moore_ratio_pct)) return s;
        }
        *out_count = table.size();
        return ORDEG_OK;
    });
}

ordeg_status ordeg_verify_prop1(ordeg_prop1_report* out) {
    if (ordeg_status s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        ordeg::SubsetAdjacencyReport r = ordeg::verify_prop1_machinery();
        out->ab_partitions = r.ab_partitions ? 1 : 0;
        out->cd_partitions = r.cd_partitions ? 1 : 0;
        out->c_adjacent_d = r.c_adjacent_d ? 1 : 0;
        out->a_covers_c = r.a_covers_c ? 1 : 0;
        out->b_covers_d = r.b_covers_d ? 1 : 0;
        out->all_pass = r.all_pass() ? 1 : 0;
        return ORDEG_OK;
    });
}

ordeg_status ordeg_emit_edge_list(const ordeg_graph* g, char** out_text, size_t* out_len) {
    if (ordeg_status s = require(g && out_text, "null argument")) return s;
    return guarded([&] {
        std::string text = ordeg::emit_edge_list(g->g);
        char* buf = static_cast<char*>(::operator new(text.size() + 1));
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out_text = buf;
        if (out_len) *out_len = text.size();
        return ORDEG_OK;
    });
}

ordeg_status ordeg_parse_edge_list(const char* text, size_t text_len, int64_t explicit_order, ordeg_graph** out) {
    if (ordeg_status s = require(text && out, "null argument")) return s;
    return guarded([&] {
        std::string_view sv(text, text_len == 0 ? std::strlen(text) : text_len);
        std::optional<uint64_t> order;
        if (explicit_order >= 0) order = static_cast<uint64_t>(explicit_order);
        *out = new ordeg_graph{ordeg::parse_edge_list(sv, order)};
        return ORDEG_OK;
    });
}

void ordeg_string_free(char* text) { ::operator delete(text); }

}  // extern "C"
