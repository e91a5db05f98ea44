#include "fc/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace fc {

Instance parse_instance(std::istream &in) {
    Instance inst;
    std::string line;
    long long n = -1, m = -1, t = -1;
    long long seen_e = 0, seen_t = 0;
    std::set<std::pair<int, int>> edge_set;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string prob;
            ls >> prob >> n >> m >> t >> inst.k;
            if (ls.fail() || prob != "facecover" || n < 0 || m < 0 || t < 0 || inst.k < 0)
                throw ParseError("bad problem line: " + line);
            for (int i = 0; i < n; ++i) inst.graph.add_vertex(i);
        } else if (tag == "e") {
            if (n < 0) throw ParseError("edge before problem line");
            long long u, v;
            ls >> u >> v;
            if (ls.fail() || u < 1 || v < 1 || u > n || v > n || u >= v)
                throw ParseError("bad edge line: " + line);
            if (!edge_set.insert({static_cast<int>(u), static_cast<int>(v)}).second)
                throw ParseError("duplicate edge: " + line);
            inst.graph.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1),
                                EdgeKind::Real);
            ++seen_e;
        } else if (tag == "t") {
            if (n < 0) throw ParseError("terminal before problem line");
            long long v;
            ls >> v;
            if (ls.fail() || v < 1 || v > n) throw ParseError("bad terminal line: " + line);
            inst.graph.set_terminal(static_cast<int>(v - 1), true);
            ++seen_t;
        } else {
            throw ParseError("unknown line: " + line);
        }
    }
    if (n < 0) throw ParseError("missing problem line");
    if (seen_e != m) throw ParseError("edge count mismatch");
    if (static_cast<long long>(inst.graph.terminals().size()) != t)
        throw ParseError("terminal count mismatch");
    return inst;
}

Instance parse_instance_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_instance(in);
}

std::string serialize_instance(const Instance &inst) {
    std::map<VertexId, int> remap;
    int next = 1;
    for (VertexId v : inst.graph.vertices()) remap[v] = next++;

    std::vector<std::pair<int, int>> edges;
    for (const auto &[id, ed] : inst.graph.edges()) {
        int u = remap.at(ed.u), v = remap.at(ed.v);
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(edges.begin(), edges.end());

    std::ostringstream os;
    os << "p facecover " << inst.graph.num_vertices() << " " << edges.size() << " "
       << inst.graph.terminals().size() << " " << inst.k << "\n";
    for (auto [u, v] : edges) os << "e " << u << " " << v << "\n";
    for (VertexId v : inst.graph.terminals()) os << "t " << remap.at(v) << "\n";
    return os.str();
}

void write_instance_file(const std::string &path, const Instance &inst) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << serialize_instance(inst);
}

std::string trace_json(const KernelizeResult &result) {
    nlohmann::json j;
    j["rules_fired"] = nlohmann::json::array();
    for (const RuleEvent &ev : result.rules) {
        j["rules_fired"].push_back({{"rule", ev.rule},
                                    {"node_id", ev.node_id},
                                    {"before", ev.before},
                                    {"after", ev.after}});
    }
    j["profile"] = {{"saturated_fcn", sat_str(result.saturated_fcn)}};
    j["kernel_size"] = result.kernel.graph.num_vertices();
    j["decision_hint"] = result.decision_hint;
    nlohmann::json origin = nlohmann::json::object();
    for (auto &[kv, ov] : result.vertex_origin)
        origin[std::to_string(kv)] = ov;
    j["vertex_origin"] = origin;
    return j.dump(2);
}

std::string spr_dot(const SprTree &t) {
    std::ostringstream os;
    os << "digraph spr {\n  compound=true;\n";
    for (int i = 0; i < t.size(); ++i) {
        const SprNode &n = t.nodes[i];
        const char *ty = n.type == SprType::S ? "S" : n.type == SprType::P ? "P" : "R";
        os << "  subgraph cluster_" << i << " {\n";
        os << "    label=\"" << ty << " node " << i << (i == t.root ? " (root)" : "")
           << "\";\n";
        for (VertexId v : n.skeleton.vertices()) {
            os << "    n" << i << "_" << v << " [label=\"" << v << "\""
               << (n.skeleton.is_terminal(v) ? ", shape=box, color=red" : "") << "];\n";
        }
        for (const auto &[id, ed] : n.skeleton.edges()) {
            os << "    n" << i << "_" << ed.u << " -> n" << i << "_" << ed.v
               << " [dir=none" << (ed.kind == EdgeKind::Virtual ? ", style=dashed" : "")
               << "];\n";
        }
        os << "  }\n";
    }
    for (int i = 0; i < t.size(); ++i) {
        if (t.nodes[i].parent < 0) continue;
        Corners c = t.corners(i);
        VertexId pv = *t.nodes[t.nodes[i].parent].skeleton.vertices().begin();
        VertexId cv = *t.nodes[i].skeleton.vertices().begin();
        os << "  n" << t.nodes[i].parent << "_" << pv << " -> n" << i << "_" << cv
           << " [ltail=cluster_" << t.nodes[i].parent << ", lhead=cluster_" << i
           << ", label=\"" << c.c1 << "," << c.c2 << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace fc
