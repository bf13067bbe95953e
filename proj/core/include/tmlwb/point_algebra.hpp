#pragma once

// Temporal consistency checking over interval endpoints.
//
// Each interval I contributes two points, I_1 (start) and I_2 (end), and the
// axiom I_1 < I_2. TLINKs are translated into `<` and `=` assertions between
// points, which are then closed under
//
//   x = y            =>  y = x
//   x = y, y = z     =>  x = z
//   x < y, y < z     =>  x < z
//   x = y, y < z     =>  x < z
//   x < y, y = z     =>  x < z
//
// using an agenda/database loop. A document is inconsistent as soon as an
// assertion contradicts what is already known.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tmlwb/model.hpp"

namespace tmlwb {

enum class Endpoint { Start, End };

struct TimePoint {
    IntervalRef interval;
    Endpoint end = Endpoint::Start;

    // `<id>_1` for the start, `<id>_2` for the end.
    std::string name() const;

    auto operator<=>(const TimePoint&) const = default;
    bool operator==(const TimePoint&) const = default;
};

enum class PointRel { Before, Equal };

// Equalities are stored with the smaller point on the left, so two sets of
// assertions can be compared directly.
struct PointAssertion {
    TimePoint left;
    TimePoint right;
    PointRel rel = PointRel::Before;

    static PointAssertion before(TimePoint a, TimePoint b);
    static PointAssertion equal(TimePoint a, TimePoint b);

    // "(a_2 < b_1)" / "(a_1 = b_1)"
    std::string to_string() const;

    auto operator<=>(const PointAssertion&) const = default;
    bool operator==(const PointAssertion&) const = default;
};

using AssertionSet = std::set<PointAssertion>;

// One `I_1 < I_2` per interval.
std::vector<PointAssertion> interval_axioms(const std::set<IntervalRef>& intervals);

// Point assertions for `a REL b`.
AssertionSet relation_assertions(RelType rel, const IntervalRef& a, const IntervalRef& b);

// Point assertions of a TLINK (arg1 = a, arg2 = b); empty for SLINK/ALINK
// and for TLINKs whose relation type is not a TimeML relation.
AssertionSet tlink_to_assertions(const Link& link);

// Where derived assertions are queued: FIFO gives breadth-first closure,
// LIFO depth-first. The verdict does not depend on it.
enum class AgendaOrder { Fifo, Lifo };

struct ConsistencyResult {
    bool consistent = true;
    // The assertion that could not be added; present iff inconsistent.
    std::optional<PointAssertion> conflict;
    std::size_t processed = 0;
};

// Closes the point assertions of `links` (TLINKs only; others are ignored)
// and reports the first contradiction found.
ConsistencyResult check_consistency(const std::vector<Link>& links, AgendaOrder order = AgendaOrder::Fifo);
ConsistencyResult check_consistency(const Document& doc, AgendaOrder order = AgendaOrder::Fifo);

// "! Inconsistent closure - could not assert (x < y)"
std::string inconsistency_message(const PointAssertion& conflict);

} // namespace tmlwb
