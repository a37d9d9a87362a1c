#include "homeology/homeology.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "homeology/blocks.hpp"
#include "homeology/chain.hpp"
#include "homeology/checks.hpp"
#include "homeology/corpus.hpp"
#include "homeology/error.hpp"
#include "homeology/io.hpp"
#include "homeology/maps.hpp"
#include "homeology/random.hpp"
#include "homeology/spectral.hpp"

struct hml_complex {
    hml::SimplicialComplex k;
};

namespace {

thread_local std::string last_error;

hml_status status_of(hml::ErrorKind kind) {
    using hml::ErrorKind;
    switch (kind) {
        case ErrorKind::InvalidInput: return HML_ERR_INVALID_INPUT;
        case ErrorKind::Parse: return HML_ERR_PARSE;
        case ErrorKind::NotInComplex: return HML_ERR_NOT_IN_COMPLEX;
        case ErrorKind::LabelCollision: return HML_ERR_LABEL_COLLISION;
        case ErrorKind::Budget: return HML_ERR_BUDGET;
        case ErrorKind::Hypothesis: return HML_ERR_HYPOTHESIS;
        case ErrorKind::Containment: return HML_ERR_CONTAINMENT;
        case ErrorKind::NotSubcomplex: return HML_ERR_NOT_SUBCOMPLEX;
        case ErrorKind::NotPure: return HML_ERR_NOT_PURE;
        case ErrorKind::NonOrientable: return HML_ERR_NON_ORIENTABLE;
        case ErrorKind::MissingChainSimplex: return HML_ERR_MISSING_CHAIN_SIMPLEX;
        case ErrorKind::PartitionViolation: return HML_ERR_PARTITION;
        case ErrorKind::HomologyViolation: return HML_ERR_HOMOLOGY;
        case ErrorKind::DegenerateMap: return HML_ERR_DEGENERATE_MAP;
        case ErrorKind::Internal: return HML_ERR_INTERNAL;
    }
    return HML_ERR_INTERNAL;
}

template <class F>
hml_status guarded(F&& body) {
    last_error.clear();
    try {
        body();
        return HML_OK;
    } catch (const hml::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const nlohmann::json::exception& e) {
        last_error = e.what();
        return HML_ERR_INVALID_INPUT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return HML_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return HML_ERR_INTERNAL;
    }
}

void require(const void* p, const char* name) {
    if (p == nullptr) throw hml::Error(hml::ErrorKind::InvalidInput, std::string(name) + " is null");
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, const hml::Json& j) { *out = dup(j.dump(2) + "\n"); }

hml_complex* wrap(hml::SimplicialComplex k) { return new hml_complex{std::move(k)}; }

hml::Coefficients coeffs_of(const char* text) { return hml::Coefficients::parse(text ? text : "z"); }

hml::Simplex simplex_from(const hml::SimplicialComplex& k, const char* json) {
    require(json, "simplex");
    const hml::Json j = hml::parse_json(json, "simplex");
    if (!j.is_array()) throw hml::Error(hml::ErrorKind::InvalidInput, "simplex must be an array of labels");
    std::vector<std::string> labels;
    for (const auto& v : j) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    hml::Simplex s = k.simplex_of(labels);
    if (!k.contains(s)) throw hml::Error(hml::ErrorKind::NotInComplex, "simplex " + k.to_string(s) + " is not in the complex");
    return s;
}

std::string table_text(const hml::BigradedTable& t, hml_format format) {
    return format == HML_FORMAT_MARKDOWN ? hml::table_to_markdown(t) : hml::table_to_json(t).dump(2) + "\n";
}

std::string graded_text(const hml::GradedGroup& g, hml_format format) {
    return format == HML_FORMAT_MARKDOWN ? hml::graded_to_markdown(g) : hml::graded_to_json(g).dump(2) + "\n";
}

hml::FilteredComplex filtered(const hml::SimplicialComplex& k, bool reduced, bool homological) {
    return homological ? hml::build_N_dual(k, reduced) : hml::build_N(k, reduced);
}

hml::Json blocked_json(const hml::BlockedComplex& b) {
    return hml::Json{{"complex", hml::complex_to_json(b.complex)},
                     {"blocks", hml::blocks_to_json(b.complex, hml::block_specs(b.blocks)).at("blocks")}};
}

}  // namespace

extern "C" {

const char* hml_version(void) { return "1.0.0"; }

const char* hml_last_error(void) { return last_error.c_str(); }

const char* hml_status_name(hml_status status) {
    switch (status) {
        case HML_OK: return "ok";
        case HML_ERR_INVALID_INPUT: return "invalid input";
        case HML_ERR_PARSE: return "parse error";
        case HML_ERR_NOT_IN_COMPLEX: return "not in complex";
        case HML_ERR_LABEL_COLLISION: return "label collision";
        case HML_ERR_BUDGET: return "budget exceeded";
        case HML_ERR_HYPOTHESIS: return "hypothesis violation";
        case HML_ERR_CONTAINMENT: return "containment";
        case HML_ERR_NOT_SUBCOMPLEX: return "not a subcomplex";
        case HML_ERR_NOT_PURE: return "not pure";
        case HML_ERR_NON_ORIENTABLE: return "non-orientable";
        case HML_ERR_MISSING_CHAIN_SIMPLEX: return "missing chain simplex";
        case HML_ERR_PARTITION: return "partition violation";
        case HML_ERR_HOMOLOGY: return "homology violation";
        case HML_ERR_DEGENERATE_MAP: return "degenerate map";
        case HML_ERR_INTERNAL: return "internal error";
        case HML_ERR_NULL_ARGUMENT: return "null argument";
    }
    return "unknown";
}

void hml_string_free(char* s) { std::free(s); }

hml_status hml_complex_from_json(const char* json, hml_complex** out) {
    if (json == nullptr || out == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] { *out = wrap(hml::complex_from_json(hml::parse_json(json, "complex"))); });
}

hml_status hml_complex_to_json(const hml_complex* k, char** out) {
    if (k == nullptr || out == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] { emit(out, hml::complex_to_json(k->k)); });
}

hml_status hml_complex_shape(const char* name, int n, hml_complex** out) {
    if (name == nullptr || out == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] {
        namespace s = hml::shapes;
        const std::string w = name;
        auto need = [&](int lo) {
            if (n < lo) throw hml::Error(hml::ErrorKind::InvalidInput, w + " needs n >= " + std::to_string(lo));
        };
        hml::SimplicialComplex k;
        if (w == "point") k = s::point();
        else if (w == "simplex") need(0), k = s::simplex(n);
        else if (w == "boundary") need(1), k = s::simplex_boundary(n);
        else if (w == "path") need(1), k = s::path(n);
        else if (w == "cycle") need(3), k = s::cycle(n);
        else if (w == "torus") k = s::torus();
        else if (w == "sphere0") k = s::sphere0();
        else if (w == "cylinder") k = s::cylinder();
        else if (w == "moebius") k = s::moebius();
        else if (w == "rp2") k = s::projective_plane();
        else throw hml::Error(hml::ErrorKind::InvalidInput, "unknown shape '" + w + "'");
        *out = wrap(std::move(k));
    });
}

hml_status hml_complex_random(int vertices, int dim, double density, uint64_t seed, hml_complex** out) {
    if (out == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] {
        if (vertices < 1 || dim < 0 || dim >= vertices || !(density > 0.0 && density <= 1.0)) {
            throw hml::Error(hml::ErrorKind::InvalidInput, "random complex needs 0 <= dim < vertices and 0 < density <= 1");
        }
        hml::Rng rng(seed);
        *out = wrap(hml::random_complex({vertices, dim, density}, rng));
    });
}

void hml_complex_free(hml_complex* k) { delete k; }

int hml_complex_dim(const hml_complex* k) { return k ? k->k.dim() : -2; }

long hml_complex_num_faces(const hml_complex* k) { return k ? static_cast<long>(k->k.num_faces()) : -1; }

long hml_complex_euler(const hml_complex* k) { return k ? hml::euler_characteristic(k->k) : 0; }

hml_status hml_compute(const hml_complex* k, const char* what, const char* coeffs, int reduced, int homological,
                       int page, hml_format format, char** out) {
    if (k == nullptr || what == nullptr || out == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const hml::Coefficients c = coeffs_of(coeffs);
        const std::string w = what;
        const bool red = reduced != 0;
        std::string text;
        if (w == "homology") {
            text = graded_text(hml::homology(k->k, c, red), format);
        } else if (w == "cohomology") {
            text = graded_text(hml::cohomology(k->k, c, red), format);
        } else if (w == "cohomeology") {
            text = table_text(hml::cohomeology(k->k, c, red), format);
        } else if (w == "homeology") {
            text = table_text(hml::homeology(k->k, c, red), format);
        } else if (w == "page") {
            if (page < 1) throw hml::Error(hml::ErrorKind::InvalidInput, "page must be at least 1");
            text = table_text(hml::SpectralSequence(filtered(k->k, red, homological != 0), c).table(page), format);
        } else if (w == "e-infinity") {
            text = table_text(hml::SpectralSequence(filtered(k->k, red, homological != 0), c).e_infinity(), format);
        } else if (w == "total") {
            text = graded_text(hml::SpectralSequence(filtered(k->k, red, homological != 0), c).total(), format);
        } else if (w == "links") {
            if (page != 1 && page != 2) throw hml::Error(hml::ErrorKind::InvalidInput, "links computes pages 1 and 2 only");
            const hml::LinkPage lp = hml::e1_via_links(k->k, c, red);
            text = table_text(page == 1 ? lp.e1() : lp.e2(), format);
        } else {
            throw hml::Error(hml::ErrorKind::InvalidInput, "unknown computation '" + w + "'");
        }
        *out = dup(text);
    });
}

hml_status hml_subdivide(const hml_complex* k, const char* simplex_json, const char* label, hml_complex** out) {
    if (k == nullptr || simplex_json == nullptr || out == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const hml::Simplex s = simplex_from(k->k, simplex_json);
        const std::string l = label ? label : hml::fresh_label(k->k);
        *out = wrap(hml::stellar_subdivide(k->k, s, l));
    });
}

hml_status hml_subdivide_random(const hml_complex* k, int count, uint64_t seed, hml_complex** out) {
    if (k == nullptr || out == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] {
        if (count < 0) throw hml::Error(hml::ErrorKind::InvalidInput, "count must be non-negative");
        hml::Rng rng(seed);
        hml::SimplicialComplex cur = k->k;
        for (int i = 0; i < count; ++i) {
            const hml::Simplex s = hml::random_positive_face(cur, rng);
            if (s.empty()) break;
            cur = hml::stellar_subdivide(cur, s, hml::fresh_label(cur));
        }
        *out = wrap(std::move(cur));
    });
}

hml_status hml_product(const hml_complex* a, const hml_complex* b, hml_complex** out) {
    if (a == nullptr || b == nullptr || out == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] { *out = wrap(hml::cartesian_product(a->k, b->k)); });
}

hml_status hml_join(const hml_complex* a, const hml_complex* b, hml_complex** out) {
    if (a == nullptr || b == nullptr || out == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] { *out = wrap(hml::join(a->k, b->k)); });
}

hml_status hml_disjoint_union(const hml_complex* a, const hml_complex* b, hml_complex** out) {
    if (a == nullptr || b == nullptr || out == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] { *out = wrap(hml::disjoint_union(a->k, b->k)); });
}

hml_status hml_glue(const hml_complex* k, const hml_complex* l, const char* identification_json, hml_complex** out) {
    if (k == nullptr || l == nullptr || identification_json == nullptr || out == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const auto id = hml::vertex_map_from_json(hml::parse_json(identification_json, "identification"));
        *out = wrap(hml::glue(k->k, l->k, id).complex);
    });
}

hml_status hml_verify_invariance(const hml_complex* k, int count, uint64_t seed, const char* coeffs, long face_budget,
                                 char** report, int* passed) {
    if (k == nullptr || report == nullptr || passed == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] {
        if (count < 0) throw hml::Error(hml::ErrorKind::InvalidInput, "count must be non-negative");
        if (face_budget <= 0) throw hml::Error(hml::ErrorKind::InvalidInput, "budget must be positive");
        const hml::InvarianceReport r =
            hml::verify_invariance(k->k, count, seed, coeffs_of(coeffs), static_cast<std::size_t>(face_budget));
        emit(report, hml::invariance_to_json(r));
        *passed = r.pass ? 1 : 0;
    });
}

hml_status hml_check(const char* check, const hml_complex* a, const hml_complex* b, const char* extra_json,
                     long face_budget, char** report, int* passed) {
    if (check == nullptr || a == nullptr || report == nullptr || passed == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const std::string w = check;
        const auto budget = static_cast<std::size_t>(face_budget > 0 ? face_budget : 64);
        auto second = [&]() -> const hml::SimplicialComplex& {
            if (b == nullptr) throw hml::Error(hml::ErrorKind::InvalidInput, w + " needs two complexes");
            return b->k;
        };
        hml::CheckReport r;
        if (w == "euler") {
            r = hml::check_euler(a->k);
        } else if (w == "components") {
            r = hml::check_components(a->k, budget);
        } else if (w == "kunneth-join") {
            r = hml::check_kunneth_join(a->k, second());
        } else if (w == "kunneth-product") {
            r = hml::check_kunneth_product(a->k, second());
        } else if (w == "glue") {
            const hml::SimplicialComplex& l = second();
            if (extra_json == nullptr) throw hml::Error(hml::ErrorKind::InvalidInput, "glue needs an identification map");
            r = hml::check_glue(a->k, l, hml::vertex_map_from_json(hml::parse_json(extra_json, "identification")), budget);
        } else {
            throw hml::Error(hml::ErrorKind::InvalidInput, "unknown check '" + w + "'");
        }
        emit(report, hml::report_to_json(r));
        *passed = r.pass ? 1 : 0;
    });
}

hml_status hml_blocks_validate(const hml_complex* k, const char* blocks_json, char** report) {
    if (k == nullptr || blocks_json == nullptr || report == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const auto specs = hml::blocks_from_json(k->k, hml::parse_json(blocks_json, "blocks"));
        const hml::BlockComplex b = hml::validate_block_complex(k->k, specs);
        hml::Json blocks = hml::Json::array();
        const auto listed = hml::block_specs(b);
        for (int i = 0; i < b.size(); ++i) {
            const auto& blk = b.blocks()[static_cast<std::size_t>(i)];
            hml::Json facets = hml::Json::array();
            for (const auto& f : listed[static_cast<std::size_t>(i)].faces) facets.push_back(k->k.labels_of(f));
            hml::Json boundary = hml::Json::array();
            for (const auto& e : b.boundary(i)) {
                boundary.push_back(hml::Json{{"block", e.row}, {"coefficient", e.value.to_string()}});
            }
            blocks.push_back(hml::Json{{"index", i}, {"dim", blk.dim}, {"facets", facets}, {"boundary", boundary}});
        }
        emit(report, hml::Json{{"valid", true}, {"count", b.size()}, {"blocks", blocks}});
    });
}

hml_status hml_blocks_compute(const hml_complex* k, const char* blocks_json, const char* what, const char* coeffs,
                              int reduced, hml_format format, char** out) {
    if (k == nullptr || blocks_json == nullptr || what == nullptr || out == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const auto specs = hml::blocks_from_json(k->k, hml::parse_json(blocks_json, "blocks"));
        const hml::BlockComplex b = hml::validate_block_complex(k->k, specs);
        const hml::Coefficients c = coeffs_of(coeffs);
        const bool red = reduced != 0;
        const std::string w = what;
        if (w == "cohomeology") {
            *out = dup(table_text(hml::table_from_filtered(hml::block_N(b, red), c, 2), format));
        } else if (w == "homeology") {
            *out = dup(table_text(hml::table_from_filtered(hml::block_N_dual(b, red), c, 2), format));
        } else if (w == "chain") {
            hml::Json degrees = hml::Json::object();
            int top = -1;
            for (const auto& blk : b.blocks()) top = std::max(top, blk.dim);
            for (int d = red ? 0 : 1; d <= top; ++d) {
                const hml::IntMatrix m = hml::block_boundary_matrix(b, d, red);
                hml::Json rows = hml::Json::array();
                for (const auto& row : m.to_dense()) {
                    hml::Json r = hml::Json::array();
                    for (const auto& x : row) r.push_back(x.to_string());
                    rows.push_back(r);
                }
                degrees[std::to_string(d)] = rows;
            }
            emit(out, hml::Json{{"boundary", degrees}});
        } else {
            throw hml::Error(hml::ErrorKind::InvalidInput, "unknown block computation '" + w + "'");
        }
    });
}

hml_status hml_blocks_product(const hml_complex* a, const hml_complex* b, char** out) {
    if (a == nullptr || b == nullptr || out == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] { emit(out, blocked_json(hml::product_block_complex(a->k, b->k))); });
}

hml_status hml_blocks_subdivision(const hml_complex* k, const char* simplex_json, const char* label, char** out) {
    if (k == nullptr || simplex_json == nullptr || out == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const hml::Simplex s = simplex_from(k->k, simplex_json);
        const std::string l = label ? label : hml::fresh_label(k->k);
        emit(out, blocked_json(hml::subdivision_block_complex(k->k, s, l)));
    });
}

hml_status hml_induced(const hml_complex* source, const hml_complex* target, const char* map_json, const char* coeffs,
                       int reduced, int homological, char** out) {
    if (source == nullptr || target == nullptr || map_json == nullptr || out == nullptr) return HML_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const auto vm = hml::vertex_map_from_json(hml::parse_json(map_json, "map"));
        const hml::SimplicialMap f = hml::SimplicialMap::from_labels(source->k, target->k, vm);
        const hml::Coefficients c = coeffs_of(coeffs);
        const hml::InducedMap m = homological ? hml::induced_on_homeology(f, c, reduced != 0)
                                              : hml::induced_on_cohomeology(f, c, reduced != 0);
        emit(out, hml::induced_to_json(m));
    });
}

}  // extern "C"
