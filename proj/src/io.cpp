#include "homeology/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "homeology/error.hpp"

namespace hml {

namespace {

std::string label_of(const Json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error(ErrorKind::InvalidInput, where + ": vertex labels must be strings or integers");
}

std::vector<std::string> labels_of(const Json& arr, const std::string& where) {
    if (!arr.is_array()) throw Error(ErrorKind::InvalidInput, where + " must be an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(label_of(arr[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

const Json& field(const Json& j, const char* name, const std::string& where) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidInput, where + " must be an object");
    auto it = j.find(name);
    if (it == j.end()) throw Error(ErrorKind::InvalidInput, where + " is missing \"" + name + "\"");
    return *it;
}

Json integer_to_json(const Integer& v) {
    if (v.fits_int64()) return v.small_value();
    return v.to_string();
}

Integer integer_from_json(const Json& v) {
    if (v.is_number_integer()) return Integer(v.get<long long>());
    if (v.is_string()) return Integer(v.get<std::string>());
    throw Error(ErrorKind::InvalidInput, "torsion entries must be integers");
}

Json labels_json(const SimplicialComplex& k, const Simplex& s) {
    Json a = Json::array();
    for (const auto& l : k.labels_of(s)) a.push_back(l);
    return a;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        const auto pos = msg.find("syntax error");
        if (pos != std::string::npos) msg = msg.substr(pos);
        throw Error(ErrorKind::Parse,
                    source + ": line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
    }
}

SimplicialComplex complex_from_json(const Json& j) {
    const auto vertices = labels_of(field(j, "vertices", "complex"), "complex.vertices");
    const Json& facets = field(j, "facets", "complex");
    if (!facets.is_array()) throw Error(ErrorKind::InvalidInput, "complex.facets must be an array");
    std::vector<std::vector<std::string>> list;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        list.push_back(labels_of(facets[i], "complex.facets[" + std::to_string(i) + "]"));
    }
    return SimplicialComplex::from_facets(vertices, list);
}

Json complex_to_json(const SimplicialComplex& k) {
    Json facets = Json::array();
    for (const auto& f : k.facets()) {
        if (!f.empty()) facets.push_back(labels_json(k, f));
    }
    return Json{{"vertices", k.labels()}, {"facets", facets}};
}

Json group_to_json(const AbelianGroup& g) {
    Json t = Json::array();
    for (const auto& d : g.torsion) t.push_back(integer_to_json(d));
    return Json{{"rank", g.rank}, {"torsion", t}};
}

AbelianGroup group_from_json(const Json& j) {
    const Json& r = field(j, "rank", "group");
    if (!r.is_number_integer() || r.get<long>() < 0) throw Error(ErrorKind::InvalidInput, "group rank must be a non-negative integer");
    std::vector<Integer> orders(static_cast<std::size_t>(r.get<long>()), Integer(0));
    if (j.contains("torsion")) {
        for (const auto& d : j.at("torsion")) orders.push_back(integer_from_json(d));
    }
    return AbelianGroup::from_orders(orders);
}

Json graded_to_json(const GradedGroup& g) {
    Json out = Json::object();
    for (const auto& [n, grp] : g) out[std::to_string(n)] = group_to_json(grp);
    return out;
}

Json table_to_json(const BigradedTable& t) {
    Json cells = Json::object();
    for (const auto& [pq, g] : t.cells) cells[std::to_string(pq.first) + "," + std::to_string(pq.second)] = group_to_json(g);
    return Json{{"page", t.page}, {"cells", cells}};
}

BigradedTable table_from_json(const Json& j) {
    BigradedTable t;
    if (j.contains("page")) t.page = j.at("page").get<int>();
    for (const auto& [key, g] : field(j, "cells", "table").items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) throw Error(ErrorKind::InvalidInput, "table cell key '" + key + "' is not \"p,q\"");
        t.set(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)), group_from_json(g));
    }
    return t;
}

std::string table_to_markdown(const BigradedTable& t) {
    std::ostringstream os;
    os << "page " << t.page << "\n\n";
    if (t.cells.empty()) {
        os << "all cells are zero\n";
        return os.str();
    }
    int p0 = t.cells.begin()->first.first, p1 = p0, q0 = t.cells.begin()->first.second, q1 = q0;
    for (const auto& [pq, g] : t.cells) {
        p0 = std::min(p0, pq.first);
        p1 = std::max(p1, pq.first);
        q0 = std::min(q0, pq.second);
        q1 = std::max(q1, pq.second);
    }
    os << "| p \\ q |";
    for (int q = q0; q <= q1; ++q) os << ' ' << q << " |";
    os << "\n|---|";
    for (int q = q0; q <= q1; ++q) os << "---|";
    os << '\n';
    for (int p = p0; p <= p1; ++p) {
        os << "| " << p << " |";
        for (int q = q0; q <= q1; ++q) {
            const AbelianGroup g = t.at(p, q);
            os << ' ' << (g.is_zero() ? "" : g.to_string()) << " |";
        }
        os << '\n';
    }
    return os.str();
}

std::string graded_to_markdown(const GradedGroup& g) {
    std::ostringstream os;
    os << "| n | group |\n|---|---|\n";
    for (const auto& [n, grp] : g) os << "| " << n << " | " << grp.to_string() << " |\n";
    return os.str();
}

std::string table_summary(const BigradedTable& t) {
    if (t.cells.empty()) return "0";
    std::string out;
    for (const auto& [pq, g] : t.cells) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")=" + g.to_string();
    }
    return out;
}

std::vector<BlockSpec> blocks_from_json(const SimplicialComplex& k, const Json& j) {
    const Json& blocks = field(j, "blocks", "block file");
    if (!blocks.is_array()) throw Error(ErrorKind::InvalidInput, "blocks must be an array");
    std::vector<BlockSpec> out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::string where = "blocks[" + std::to_string(i) + "]";
        const Json& faces = field(blocks[i], "faces", where);
        if (!faces.is_array()) throw Error(ErrorKind::InvalidInput, where + ".faces must be an array");
        BlockSpec spec;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            const std::string fw = where + ".faces[" + std::to_string(f) + "]";
            const auto labels = labels_of(faces[f], fw);
            Simplex s;
            for (const auto& l : labels) {
                const int v = k.vertex_index(l);
                if (v < 0) throw Error(ErrorKind::NotSubcomplex, fw + ": vertex '" + l + "' is not in the complex");
                s.push_back(v);
            }
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
                throw Error(ErrorKind::InvalidInput, fw + " repeats a vertex");
            }
            spec.faces.push_back(std::move(s));
        }
        if (blocks[i].contains("positive")) {
            std::vector<int> seq;
            for (const auto& l : labels_of(blocks[i].at("positive"), where + ".positive")) {
                const int v = k.vertex_index(l);
                if (v < 0) throw Error(ErrorKind::InvalidInput, where + ".positive: unknown vertex '" + l + "'");
                seq.push_back(v);
            }
            spec.positive = seq;
        }
        out.push_back(std::move(spec));
    }
    return out;
}

Json blocks_to_json(const SimplicialComplex& k, const std::vector<BlockSpec>& blocks) {
    Json arr = Json::array();
    for (const auto& b : blocks) {
        Json faces = Json::array();
        for (const auto& f : b.faces) faces.push_back(labels_json(k, f));
        Json entry{{"faces", faces}};
        if (b.positive) {
            Json pos = Json::array();
            for (int v : *b.positive) pos.push_back(k.label(v));
            entry["positive"] = pos;
        }
        arr.push_back(entry);
    }
    return Json{{"blocks", arr}};
}

std::map<std::string, std::string> vertex_map_from_json(const Json& j) {
    const Json& m = field(j, "vertex_map", "map file");
    if (!m.is_object()) throw Error(ErrorKind::InvalidInput, "vertex_map must be an object");
    std::map<std::string, std::string> out;
    for (const auto& [a, b] : m.items()) out[a] = label_of(b, "vertex_map." + a);
    return out;
}

Json report_to_json(const CheckReport& r) {
    return Json{{"check", r.check}, {"pass", r.pass}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"notes", r.notes}};
}

Json invariance_to_json(const InvarianceReport& r) {
    Json j{{"pass", r.pass}, {"steps", r.steps}, {"log", r.log}};
    if (!r.pass) j["failure"] = r.failure;
    return j;
}

Json induced_to_json(const InducedMap& m) {
    Json cells = Json::object();
    for (const auto& [pq, mat] : m.cells) {
        Json rows = Json::array();
        for (const auto& row : mat) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(integer_to_json(x));
            rows.push_back(r);
        }
        auto orders = [](const Presentation& p) {
            Json a = Json::array();
            for (const auto& o : p.orders) a.push_back(integer_to_json(o));
            return a;
        };
        cells[std::to_string(pq.first) + "," + std::to_string(pq.second)] =
            Json{{"matrix", rows}, {"source_orders", orders(m.source.at(pq))}, {"target_orders", orders(m.target.at(pq))}};
    }
    return Json{{"page", m.page}, {"cells", cells}};
}

}  // namespace hml
