#include "support.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <unistd.h>

namespace tmlwb::test {

IntervalRef ei(const std::string& id) { return {IntervalKind::EventInstance, id}; }
IntervalRef tx(const std::string& id) { return {IntervalKind::Timex, id}; }

Link tlink(const std::string& lid, RelType rel, IntervalRef a, IntervalRef b) {
    Link l;
    l.kind = LinkKind::TLink;
    l.lid = lid;
    l.rel_type = std::string(to_string(rel));
    l.arg1_attribute = default_arg_attribute(LinkKind::TLink, 1, a.kind);
    l.arg2_attribute = default_arg_attribute(LinkKind::TLink, 2, b.kind);
    l.arg1 = std::move(a);
    l.arg2 = std::move(b);
    return l;
}

Document doc_with_links(std::vector<Link> links, const std::string& filename) {
    Document d;
    d.doc_id = 1;
    d.filename = filename;
    d.links = std::move(links);
    return d;
}

namespace {

RawAssertion make_raw(std::string l, const std::string& op, std::string r) {
    if (op == "=" && r < l) {
        std::swap(l, r);
    }
    return {l, op, r};
}

} // namespace

std::set<RawAssertion> raw(const AssertionSet& set) {
    std::set<RawAssertion> out;
    for (const auto& a : set) {
        out.insert(make_raw(a.left.name(), a.rel == PointRel::Before ? "<" : "=", a.right.name()));
    }
    return out;
}

std::set<RawAssertion> raw(const std::vector<PointAssertion>& list) { return raw(AssertionSet(list.begin(), list.end())); }

std::set<RawAssertion> expected_points(RelType rel, const std::string& a, const std::string& b) {
    const std::string as = a + "_1", ae = a + "_2", bs = b + "_1", be = b + "_2";
    std::vector<RawAssertion> rows;
    switch (rel) {
    case RelType::Before:
        rows = {{ae, "<", bs}};
        break;
    case RelType::After:
        rows = {{be, "<", as}};
        break;
    case RelType::IAfter:
        rows = {{be, "=", as}};
        break;
    case RelType::IBefore:
        rows = {{ae, "=", bs}};
        break;
    case RelType::Includes:
        rows = {{as, "<", bs}, {be, "<", ae}};
        break;
    case RelType::IsIncluded:
        rows = {{bs, "<", as}, {ae, "<", be}};
        break;
    case RelType::Begins:
        rows = {{as, "=", bs}, {ae, "<", be}};
        break;
    case RelType::BegunBy:
        rows = {{as, "=", bs}, {be, "<", ae}};
        break;
    case RelType::Ends:
        rows = {{ae, "=", be}, {bs, "<", as}};
        break;
    case RelType::EndedBy:
        rows = {{be, "=", ae}, {as, "<", bs}};
        break;
    case RelType::Simultaneous:
    case RelType::During:
    case RelType::DuringInv:
        rows = {{as, "=", bs}, {ae, "=", be}};
        break;
    case RelType::Identity:
        rows = {{as, "=", bs}, {be, "=", ae}};
        break;
    }
    std::set<RawAssertion> out;
    for (auto& [l, op, r] : rows) {
        out.insert(make_raw(l, op, r));
    }
    return out;
}

namespace {

std::vector<RawAssertion> all_assertions(const std::vector<Link>& links) {
    std::vector<RawAssertion> out;
    std::set<std::string> intervals;
    for (const auto& l : links) {
        const auto rel = l.temporal_relation();
        if (l.kind != LinkKind::TLink || !rel) {
            continue;
        }
        intervals.insert(l.arg1.id);
        intervals.insert(l.arg2.id);
        for (const auto& a : expected_points(*rel, l.arg1.id, l.arg2.id)) {
            out.push_back(a);
        }
    }
    for (const auto& i : intervals) {
        out.push_back({i + "_1", "<", i + "_2"});
    }
    return out;
}

struct UnionFind {
    std::map<std::string, std::string> parent;
    std::string find(const std::string& x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        if (it->second == x) {
            return x;
        }
        const std::string root = find(it->second);
        parent[x] = root;
        return root;
    }
    void unite(const std::string& a, const std::string& b) { parent[find(a)] = find(b); }
};

} // namespace

bool oracle_consistent(const std::vector<Link>& links) {
    const auto assertions = all_assertions(links);
    UnionFind uf;
    for (const auto& [l, op, r] : assertions) {
        uf.find(l);
        uf.find(r);
        if (op == "=") {
            uf.unite(l, r);
        }
    }
    std::map<std::string, std::set<std::string>> edges;
    for (const auto& [l, op, r] : assertions) {
        if (op == "<") {
            const auto a = uf.find(l), b = uf.find(r);
            if (a == b) {
                return false;
            }
            edges[a].insert(b);
        }
    }
    // Iterative three-colour DFS.
    std::map<std::string, int> colour;
    for (const auto& [start, unused] : edges) {
        if (colour[start] != 0) {
            continue;
        }
        std::vector<std::pair<std::string, std::set<std::string>::const_iterator>> stack;
        colour[start] = 1;
        stack.push_back({start, edges[start].cbegin()});
        while (!stack.empty()) {
            auto& [node, it] = stack.back();
            if (it == edges[node].cend()) {
                colour[node] = 2;
                stack.pop_back();
                continue;
            }
            const std::string next = *it++;
            if (colour[next] == 1) {
                return false;
            }
            if (colour[next] == 0) {
                colour[next] = 1;
                stack.push_back({next, edges[next].cbegin()});
            }
        }
    }
    return true;
}

bool three_rule_consistent(const std::vector<Link>& links) {
    std::set<std::pair<std::string, std::string>> lt;
    std::set<std::pair<std::string, std::string>> eq;
    for (const auto& [l, op, r] : all_assertions(links)) {
        (op == "<" ? lt : eq).insert({l, r});
    }
    for (bool changed = true; changed;) {
        changed = false;
        auto add = [&](auto& set, std::pair<std::string, std::string> p) {
            if (set.insert(p).second) {
                changed = true;
            }
        };
        for (const auto& [x, y] : std::set(eq)) {
            add(eq, {y, x});
            for (const auto& [y2, z] : std::set(eq)) {
                if (y2 == y && x != z) {
                    add(eq, {x, z});
                }
            }
        }
        for (const auto& [x, y] : std::set(lt)) {
            for (const auto& [y2, z] : std::set(lt)) {
                if (y2 == y) {
                    add(lt, {x, z});
                }
            }
        }
    }
    for (const auto& [x, y] : lt) {
        if (x == y || lt.contains({y, x}) || eq.contains({x, y}) || eq.contains({y, x})) {
            return false;
        }
    }
    return true;
}

std::vector<Link> random_links(std::mt19937& rng, int max_intervals, int max_links) {
    std::uniform_int_distribution<int> n_int(1, max_intervals);
    std::uniform_int_distribution<int> n_link(0, max_links);
    std::uniform_int_distribution<std::size_t> rel(0, kAllRelTypes.size() - 1);
    const int intervals = n_int(rng);
    const int count = n_link(rng);
    std::uniform_int_distribution<int> pick(1, intervals);
    std::vector<Link> links;
    for (int i = 0; i < count; ++i) {
        links.push_back(tlink("l" + std::to_string(i + 1), kAllRelTypes[rel(rng)], ei("ei" + std::to_string(pick(rng))),
                              ei("ei" + std::to_string(pick(rng)))));
    }
    return links;
}

TempDir::TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "tmlwb-test-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) {
        throw std::runtime_error("mkdtemp failed");
    }
    path_ = tmpl;
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path fixture_dir() { return TMLWB_SOURCE_DIR "/data/test_corpus"; }
std::filesystem::path golden_dir() { return TMLWB_SOURCE_DIR "/tests/golden"; }

} // namespace tmlwb::test
