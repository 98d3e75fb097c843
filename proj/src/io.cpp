#include "planemf/io.hpp"

#include <fstream>
#include <sstream>

#include "planemf/errors.hpp"

namespace planemf {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

long long to_int(const std::string& s, int line) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw syntax_error(line, "expected an integer, got '" + s + "'");
    }
}

}  // namespace

Instance parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    int n = -1;
    struct RawEdge { int u, v; EdgeRole role; long long cap; };
    std::vector<RawEdge> raw_edges;
    std::vector<std::vector<int>> raw_rotation;  // edge ids per vertex
    std::vector<bool> have_rotation;
    long long outer = -1;
    bool have_magic = false, have_outer = false;

    while (std::getline(in, line)) {
        ++lineno;
        auto tok = tokens(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (!have_magic) {
            if (tok.size() != 2 || tok[0] != "planemf" || tok[1] != "1")
                throw syntax_error(lineno, "expected header 'planemf 1'");
            have_magic = true;
            continue;
        }
        if (tok[0] == "vertices") {
            if (tok.size() != 2) throw syntax_error(lineno, "vertices <n>");
            if (n != -1) throw syntax_error(lineno, "duplicate vertices line");
            n = static_cast<int>(to_int(tok[1], lineno));
            if (n <= 0) throw syntax_error(lineno, "vertex count must be positive");
            raw_rotation.assign(n, {});
            have_rotation.assign(n, false);
        } else if (tok[0] == "edge") {
            if (n == -1) throw syntax_error(lineno, "edge before vertices line");
            if (tok.size() < 4) throw syntax_error(lineno, "edge <u> <v> supply <c> | demand");
            int u = static_cast<int>(to_int(tok[1], lineno));
            int v = static_cast<int>(to_int(tok[2], lineno));
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw syntax_error(lineno, "edge endpoint out of range");
            if (u == v) throw syntax_error(lineno, "loop edges are not allowed");
            if (tok[3] == "supply") {
                if (tok.size() != 5) throw syntax_error(lineno, "supply edge needs a capacity");
                long long c = to_int(tok[4], lineno);
                if (c < 0) throw syntax_error(lineno, "capacity must be nonnegative");
                raw_edges.push_back({u, v, EdgeRole::supply, c});
            } else if (tok[3] == "demand") {
                if (tok.size() != 4) throw syntax_error(lineno, "demand edge takes no capacity");
                raw_edges.push_back({u, v, EdgeRole::demand, 0});
            } else {
                throw syntax_error(lineno, "edge kind must be 'supply' or 'demand'");
            }
        } else if (tok[0] == "rotation") {
            if (n == -1) throw syntax_error(lineno, "rotation before vertices line");
            if (tok.size() < 2) throw syntax_error(lineno, "rotation <v> <edge-id>...");
            int v = static_cast<int>(to_int(tok[1], lineno));
            if (v < 0 || v >= n) throw syntax_error(lineno, "rotation vertex out of range");
            if (have_rotation[v]) throw syntax_error(lineno, "duplicate rotation line");
            have_rotation[v] = true;
            for (size_t i = 2; i < tok.size(); ++i) {
                long long e = to_int(tok[i], lineno);
                if (e < 0 || e >= static_cast<long long>(raw_edges.size()))
                    throw syntax_error(lineno, "rotation references unknown edge id");
                raw_rotation[v].push_back(static_cast<int>(e));
            }
        } else if (tok[0] == "outer") {
            if (tok.size() != 2) throw syntax_error(lineno, "outer <face-index>");
            if (have_outer) throw syntax_error(lineno, "duplicate outer line");
            outer = to_int(tok[1], lineno);
            have_outer = true;
        } else {
            throw syntax_error(lineno, "unknown keyword '" + tok[0] + "'");
        }
    }
    if (!have_magic) throw syntax_error(lineno, "missing 'planemf 1' header");
    if (n == -1) throw syntax_error(lineno, "missing vertices line");
    if (!have_outer) throw syntax_error(lineno, "missing outer line");

    // drop zero-capacity supply edges, reindexing the survivors in file order
    std::vector<int> new_id(raw_edges.size(), -1);
    EmbeddingBuilder b;
    std::vector<EdgeRole> role;
    std::vector<long long> cap;
    for (int v = 0; v < n; ++v) b.add_vertex();
    for (size_t e = 0; e < raw_edges.size(); ++e) {
        const auto& re = raw_edges[e];
        if (re.role == EdgeRole::supply && re.cap == 0) continue;
        new_id[e] = b.add_edge_raw(re.u, re.v);
        role.push_back(re.role);
        cap.push_back(re.cap);
    }
    for (int v = 0; v < n; ++v) {
        for (int e : raw_rotation[v]) {
            if (new_id[e] == -1) continue;
            int id = new_id[e];
            int dart = (b.edges[id].first == v) ? 2 * id : 2 * id + 1;
            b.rotation[v].push_back(dart);
        }
    }
    return make_instance(std::move(b), std::move(role), std::move(cap),
                         static_cast<int>(outer));
}

std::string serialize(const Instance& inst) {
    std::ostringstream out;
    out << "planemf 1\n";
    out << "vertices " << inst.plane.num_vertices << "\n";
    for (int e = 0; e < inst.plane.num_edges(); ++e) {
        auto [u, v] = inst.plane.edges[e];
        out << "edge " << u << " " << v;
        if (inst.is_supply(e))
            out << " supply " << inst.capacity[e];
        else
            out << " demand";
        out << "\n";
    }
    for (int v = 0; v < inst.plane.num_vertices; ++v) {
        out << "rotation " << v;
        for (int d : inst.plane.rotation[v]) out << " " << d / 2;
        out << "\n";
    }
    out << "outer " << inst.plane.outer_face << "\n";
    return out.str();
}

Flow parse_flow(const Instance& inst, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_magic = false;
    Flow f;

    // smallest supply edge id joining two vertices
    auto find_supply_edge = [&](int u, int v) -> int {
        for (int e = 0; e < inst.plane.num_edges(); ++e) {
            if (!inst.is_supply(e)) continue;
            auto [a, b] = inst.plane.edges[e];
            if ((a == u && b == v) || (a == v && b == u)) return e;
        }
        return -1;
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto tok = tokens(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (!have_magic) {
            if (tok.size() != 2 || tok[0] != "planemf-flow" || tok[1] != "1")
                throw syntax_error(lineno, "expected header 'planemf-flow 1'");
            have_magic = true;
            continue;
        }
        if (tok[0] != "flow") throw syntax_error(lineno, "unknown keyword '" + tok[0] + "'");
        if (tok.size() < 5) throw syntax_error(lineno, "flow <demand-edge> <value> <v0> <v1>...");
        int de = static_cast<int>(to_int(tok[1], lineno));
        if (de < 0 || de >= inst.plane.num_edges() || !inst.is_demand(de))
            throw syntax_error(lineno, "not a demand edge id");
        Rational val;
        try {
            val = Rational::from_string(tok[2]);
        } catch (const bad_parameter& e) {
            throw syntax_error(lineno, e.what());
        }
        if (val.sign() < 0) throw syntax_error(lineno, "flow value must be nonnegative");
        Path p;
        p.demand_edge = de;
        for (size_t i = 3; i < tok.size(); ++i) {
            long long v = to_int(tok[i], lineno);
            if (v < 0 || v >= inst.plane.num_vertices)
                throw syntax_error(lineno, "vertex out of range");
            p.vertices.push_back(static_cast<int>(v));
        }
        for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
            int e = find_supply_edge(p.vertices[i], p.vertices[i + 1]);
            if (e == -1)
                throw syntax_error(lineno, "no supply edge between consecutive path vertices");
            p.edges.push_back(e);
        }
        f.add(std::move(p), val);
    }
    if (!have_magic) throw syntax_error(lineno, "missing 'planemf-flow 1' header");
    return f;
}

std::string serialize_flow(const Instance&, const Flow& f) {
    std::ostringstream out;
    out << "planemf-flow 1\n";
    for (const auto& fe : f.entries) {
        out << "flow " << fe.path.demand_edge << " " << fe.value.num_int64();
        out << "/" << fe.value.den_int64();
        for (int v : fe.path.vertices) out << " " << v;
        out << "\n";
    }
    return out.str();
}

Instance load_instance_file(const std::string& path) {
    return parse(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write file: " + path);
    out << text;
}

}  // namespace planemf
