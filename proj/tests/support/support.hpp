#pragma once

// Test-only helpers: document builders, a temp directory, and two
// consistency oracles written independently of the library's closure code.

#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tmlwb/model.hpp"
#include "tmlwb/point_algebra.hpp"

namespace tmlwb::test {

IntervalRef ei(const std::string& id);
IntervalRef tx(const std::string& id);
Link tlink(const std::string& lid, RelType rel, IntervalRef a, IntervalRef b);
Document doc_with_links(std::vector<Link> links, const std::string& filename = "doc.tml");

// A point assertion as plain strings: {"a_2", "<", "b_1"}. Equalities are
// written with the lexicographically smaller point first.
using RawAssertion = std::tuple<std::string, std::string, std::string>;
std::set<RawAssertion> raw(const AssertionSet& set);
std::set<RawAssertion> raw(const std::vector<PointAssertion>& list);

// Endpoint assertions for `a rel b`, written out by hand.
std::set<RawAssertion> expected_points(RelType rel, const std::string& a, const std::string& b);

// Union-find over `=`, then cycle detection over `<` between classes.
bool oracle_consistent(const std::vector<Link>& links);

// Fixpoint closure using only symmetry and transitivity of `=` and
// transitivity of `<`, with the conflict tests x<x, x<y & y<x, x<y & x=y.
bool three_rule_consistent(const std::vector<Link>& links);

// Up to `max_intervals` event instances and `max_links` TLINKs with
// uniformly random relation types and arguments (self-loops allowed).
std::vector<Link> random_links(std::mt19937& rng, int max_intervals = 8, int max_links = 12);

class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

// The committed fixture corpus.
std::filesystem::path fixture_dir();
std::filesystem::path golden_dir();

} // namespace tmlwb::test
