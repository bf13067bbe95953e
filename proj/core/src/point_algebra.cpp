#include "tmlwb/point_algebra.hpp"

#include <cstdint>
#include <deque>
#include <map>

namespace tmlwb {

namespace {

TimePoint start_of(const IntervalRef& i) { return {i, Endpoint::Start}; }
TimePoint end_of(const IntervalRef& i) { return {i, Endpoint::End}; }

// Dense closure state over the points of one document.
class ClosureEngine {
public:
    enum : std::uint8_t { kDbLess = 1, kAgendaLess = 2, kDbEqual = 4, kAgendaEqual = 8 };

    struct Item {
        std::size_t left;
        std::size_t right;
        PointRel rel;
    };

    ClosureEngine(std::vector<TimePoint> points, AgendaOrder order)
        : points_(std::move(points)),
          n_(points_.size()),
          state_(n_ * n_, 0),
          succ_(n_),
          pred_(n_),
          equal_(n_),
          order_(order) {}

    void add_axiom(std::size_t a, std::size_t b) { store(Item{a, b, PointRel::Before}); }

    // Queues an initial assertion; false if it contradicts what is known.
    bool seed(const Item& item) { return !conflict_ && derive(item); }

    ConsistencyResult run() {
        ConsistencyResult result;
        if (conflict_) {
            return fail(std::move(result));
        }
        while (!agenda_.empty()) {
            Item item;
            if (order_ == AgendaOrder::Fifo) {
                item = agenda_.front();
                agenda_.pop_front();
            } else {
                item = agenda_.back();
                agenda_.pop_back();
            }
            unmark_agenda(item);
            ++result.processed;
            if (conflicts(item)) {
                conflict_ = item;
                return fail(std::move(result));
            }
            if (!infer_from(item)) {
                return fail(std::move(result));
            }
            store(item);
        }
        return result;
    }

private:
    std::uint8_t& at(std::size_t a, std::size_t b) { return state_[a * n_ + b]; }

    bool known_less(std::size_t a, std::size_t b) { return (at(a, b) & (kDbLess | kAgendaLess)) != 0; }
    bool known_equal(std::size_t a, std::size_t b) { return (at(a, b) & (kDbEqual | kAgendaEqual)) != 0; }

    bool known(const Item& item) {
        return item.rel == PointRel::Before ? known_less(item.left, item.right) : known_equal(item.left, item.right);
    }

    bool conflicts(const Item& item) {
        const auto [x, y, rel] = item;
        if (rel == PointRel::Before) {
            return x == y || known_less(y, x) || known_equal(x, y);
        }
        return x != y && (known_less(x, y) || known_less(y, x));
    }

    // Queues a derived assertion unless it is trivial or already known.
    bool derive(const Item& item) {
        if (item.rel == PointRel::Equal && item.left == item.right) {
            return true;
        }
        if (known(item)) {
            return true;
        }
        if (conflicts(item)) {
            conflict_ = item;
            return false;
        }
        if (item.rel == PointRel::Before) {
            at(item.left, item.right) |= kAgendaLess;
        } else {
            at(item.left, item.right) |= kAgendaEqual;
            at(item.right, item.left) |= kAgendaEqual;
        }
        agenda_.push_back(item);
        return true;
    }

    void unmark_agenda(const Item& item) {
        if (item.rel == PointRel::Before) {
            at(item.left, item.right) &= static_cast<std::uint8_t>(~kAgendaLess);
        } else {
            at(item.left, item.right) &= static_cast<std::uint8_t>(~kAgendaEqual);
            at(item.right, item.left) &= static_cast<std::uint8_t>(~kAgendaEqual);
        }
    }

    // Combines `item` with every database entry that shares a point.
    bool infer_from(const Item& item) {
        const std::size_t x = item.left;
        const std::size_t y = item.right;
        if (item.rel == PointRel::Before) {
            for (std::size_t z : succ_[y]) {
                if (!derive({x, z, PointRel::Before})) return false;
            }
            for (std::size_t w : pred_[x]) {
                if (!derive({w, y, PointRel::Before})) return false;
            }
            for (std::size_t z : equal_[y]) {
                if (!derive({x, z, PointRel::Before})) return false;
            }
            for (std::size_t w : equal_[x]) {
                if (!derive({w, y, PointRel::Before})) return false;
            }
            return true;
        }
        for (std::size_t z : equal_[y]) {
            if (!derive({x, z, PointRel::Equal})) return false;
        }
        for (std::size_t z : equal_[x]) {
            if (!derive({z, y, PointRel::Equal})) return false;
        }
        for (std::size_t z : succ_[y]) {
            if (!derive({x, z, PointRel::Before})) return false;
        }
        for (std::size_t z : succ_[x]) {
            if (!derive({y, z, PointRel::Before})) return false;
        }
        for (std::size_t w : pred_[y]) {
            if (!derive({w, x, PointRel::Before})) return false;
        }
        for (std::size_t w : pred_[x]) {
            if (!derive({w, y, PointRel::Before})) return false;
        }
        return true;
    }

    void store(const Item& item) {
        if (item.rel == PointRel::Before) {
            if (!(at(item.left, item.right) & kDbLess)) {
                at(item.left, item.right) |= kDbLess;
                succ_[item.left].push_back(item.right);
                pred_[item.right].push_back(item.left);
            }
            return;
        }
        if (!(at(item.left, item.right) & kDbEqual)) {
            at(item.left, item.right) |= kDbEqual;
            at(item.right, item.left) |= kDbEqual;
            equal_[item.left].push_back(item.right);
            equal_[item.right].push_back(item.left);
        }
    }

    ConsistencyResult fail(ConsistencyResult result) {
        result.consistent = false;
        const Item& c = *conflict_;
        result.conflict = c.rel == PointRel::Before ? PointAssertion::before(points_[c.left], points_[c.right])
                                                    : PointAssertion::equal(points_[c.left], points_[c.right]);
        return result;
    }

    std::vector<TimePoint> points_;
    std::size_t n_;
    std::vector<std::uint8_t> state_;
    std::vector<std::vector<std::size_t>> succ_;
    std::vector<std::vector<std::size_t>> pred_;
    std::vector<std::vector<std::size_t>> equal_;
    std::deque<Item> agenda_;
    std::optional<Item> conflict_;
    AgendaOrder order_;
};

} // namespace

std::string TimePoint::name() const { return interval.id + (end == Endpoint::Start ? "_1" : "_2"); }

PointAssertion PointAssertion::before(TimePoint a, TimePoint b) {
    return PointAssertion{std::move(a), std::move(b), PointRel::Before};
}

PointAssertion PointAssertion::equal(TimePoint a, TimePoint b) {
    if (b < a) {
        std::swap(a, b);
    }
    return PointAssertion{std::move(a), std::move(b), PointRel::Equal};
}

std::string PointAssertion::to_string() const {
    return "(" + left.name() + (rel == PointRel::Before ? " < " : " = ") + right.name() + ")";
}

std::vector<PointAssertion> interval_axioms(const std::set<IntervalRef>& intervals) {
    std::vector<PointAssertion> out;
    out.reserve(intervals.size());
    for (const auto& i : intervals) {
        out.push_back(PointAssertion::before(start_of(i), end_of(i)));
    }
    return out;
}

AssertionSet relation_assertions(RelType rel, const IntervalRef& a, const IntervalRef& b) {
    const TimePoint a1 = start_of(a);
    const TimePoint a2 = end_of(a);
    const TimePoint b1 = start_of(b);
    const TimePoint b2 = end_of(b);
    using P = PointAssertion;
    switch (rel) {
    case RelType::Before:
        return {P::before(a2, b1)};
    case RelType::After:
        return {P::before(b2, a1)};
    case RelType::IAfter:
        return {P::equal(b2, a1)};
    case RelType::IBefore:
        return {P::equal(a2, b1)};
    case RelType::Includes:
        return {P::before(a1, b1), P::before(b2, a2)};
    case RelType::IsIncluded:
        return {P::before(b1, a1), P::before(a2, b2)};
    case RelType::Begins:
        return {P::equal(a1, b1), P::before(a2, b2)};
    case RelType::BegunBy:
        return {P::equal(a1, b1), P::before(b2, a2)};
    case RelType::Ends:
        return {P::equal(a2, b2), P::before(b1, a1)};
    case RelType::EndedBy:
        return {P::equal(b2, a2), P::before(a1, b1)};
    case RelType::Simultaneous:
        return {P::equal(a1, b1), P::equal(a2, b2)};
    case RelType::Identity:
        return {P::equal(a1, b1), P::equal(b2, a2)};
    case RelType::During:
        return {P::equal(a1, b1), P::equal(a2, b2)};
    case RelType::DuringInv:
        return {P::equal(a1, b1), P::equal(a2, b2)};
    }
    return {};
}

AssertionSet tlink_to_assertions(const Link& link) {
    const auto rel = link.temporal_relation();
    if (!rel) {
        return {};
    }
    return relation_assertions(*rel, link.arg1, link.arg2);
}

ConsistencyResult check_consistency(const std::vector<Link>& links, AgendaOrder order) {
    std::set<IntervalRef> intervals;
    for (const auto& link : links) {
        if (link.temporal_relation()) {
            intervals.insert(link.arg1);
            intervals.insert(link.arg2);
        }
    }
    if (intervals.empty()) {
        return {};
    }

    std::vector<TimePoint> points;
    std::map<TimePoint, std::size_t> index;
    for (const auto& i : intervals) {
        for (const auto& p : {start_of(i), end_of(i)}) {
            index.emplace(p, points.size());
            points.push_back(p);
        }
    }

    ClosureEngine engine(points, order);
    for (const auto& axiom : interval_axioms(intervals)) {
        engine.add_axiom(index.at(axiom.left), index.at(axiom.right));
    }
    bool seeded = true;
    for (const auto& link : links) {
        for (const auto& a : tlink_to_assertions(link)) {
            seeded = seeded && engine.seed({index.at(a.left), index.at(a.right), a.rel});
        }
    }
    return engine.run();
}

ConsistencyResult check_consistency(const Document& doc, AgendaOrder order) {
    return check_consistency(doc.links, order);
}

std::string inconsistency_message(const PointAssertion& conflict) {
    return "! Inconsistent closure - could not assert " + conflict.to_string();
}

} // namespace tmlwb
