#include "sct/state_set.hh"

#include "sct/errors.hh"

#include <sstream>

namespace sct {

StateSet StateSet::of(std::size_t universe, std::initializer_list<State> members) {
    return of(universe, std::vector<State>(members));
}

StateSet StateSet::of(std::size_t universe, const std::vector<State>& members) {
    StateSet set(universe);
    for (State q : members) {
        set.insert(q);
    }
    return set;
}

StateSet StateSet::from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) {
        throw InvalidArgument("StateSet::from_mask: universe " + std::to_string(universe) + " exceeds 64");
    }
    StateSet set(universe);
    for (std::size_t q = 0; q < universe; ++q) {
        if ((mask >> q) & 1U) {
            set.bits_[q] = true;
        }
    }
    return set;
}

void StateSet::insert(State q) {
    if (q >= bits_.size()) {
        throw OutOfRange("state " + std::to_string(q) + " outside [0," + std::to_string(bits_.size()) + ")");
    }
    bits_[q] = true;
}

void StateSet::erase(State q) {
    if (q < bits_.size()) {
        bits_[q] = false;
    }
}

std::size_t StateSet::count() const noexcept {
    std::size_t c = 0;
    for (bool b : bits_) {
        c += b ? 1 : 0;
    }
    return c;
}

std::vector<State> StateSet::members() const {
    std::vector<State> out;
    for (std::size_t q = 0; q < bits_.size(); ++q) {
        if (bits_[q]) {
            out.push_back(static_cast<State>(q));
        }
    }
    return out;
}

std::uint64_t StateSet::mask() const {
    if (bits_.size() > 64) {
        throw InvalidArgument("StateSet::mask: universe exceeds 64");
    }
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < bits_.size(); ++q) {
        if (bits_[q]) {
            m |= std::uint64_t{1} << q;
        }
    }
    return m;
}

StateSet StateSet::complement() const {
    StateSet out(bits_.size());
    for (std::size_t q = 0; q < bits_.size(); ++q) {
        out.bits_[q] = !bits_[q];
    }
    return out;
}

std::string StateSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (State q : members()) {
        if (!first) {
            os << ',';
        }
        os << q;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace sct
