#include "sct/cdfa.hh"

#include "hash.hh"
#include "sct/errors.hh"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>

namespace sct {

namespace {

std::vector<std::string> index_labels(std::size_t letter_count) {
    std::vector<std::string> labels(letter_count);
    for (std::size_t a = 0; a < letter_count; ++a) {
        labels[a] = std::to_string(a);
    }
    return labels;
}

std::vector<std::string> select_labels(const Cdfa& a, std::span<const Letter> letters) {
    std::vector<std::string> out;
    out.reserve(letters.size());
    for (Letter l : letters) {
        out.push_back(a.labels()[l]);
    }
    return out;
}

} // namespace

Cdfa::Cdfa(std::size_t letter_count, std::size_t state_count, State initial, StateSet finals,
           std::vector<State> table, std::vector<std::string> labels)
    : letter_count_(letter_count), state_count_(state_count), initial_(initial), finals_(std::move(finals)),
      table_(std::move(table)), labels_(std::move(labels)) {
    if (letter_count_ == 0) {
        throw InvalidArgument("Cdfa: the alphabet must contain at least one letter");
    }
    if (state_count_ == 0) {
        throw InvalidArgument("Cdfa: an automaton needs at least one state");
    }
    if (state_count_ > std::numeric_limits<State>::max()) {
        throw InvalidArgument("Cdfa: too many states");
    }
    if (table_.size() != letter_count_ * state_count_) {
        throw InvalidArgument("Cdfa: transition table has " + std::to_string(table_.size()) + " cells, expected " +
                              std::to_string(letter_count_ * state_count_));
    }
    for (std::size_t cell = 0; cell < table_.size(); ++cell) {
        if (table_[cell] >= state_count_) {
            throw InvalidArgument("Cdfa: transition from state " + std::to_string(cell / letter_count_) +
                                  " on letter " + std::to_string(cell % letter_count_) + " targets " +
                                  std::to_string(table_[cell]));
        }
    }
    if (initial_ >= state_count_) {
        throw InvalidArgument("Cdfa: initial state " + std::to_string(initial_) + " out of range");
    }
    if (finals_.universe() != state_count_) {
        throw InvalidArgument("Cdfa: final-state set is over " + std::to_string(finals_.universe()) +
                              " states, automaton has " + std::to_string(state_count_));
    }
    if (labels_.empty()) {
        labels_ = index_labels(letter_count_);
    } else if (labels_.size() != letter_count_) {
        throw InvalidArgument("Cdfa: " + std::to_string(labels_.size()) + " labels for " +
                              std::to_string(letter_count_) + " letters");
    }
}

Cdfa Cdfa::from_rows(const std::vector<std::vector<State>>& rows, State initial, std::initializer_list<State> finals,
                     std::vector<std::string> labels) {
    if (rows.empty()) {
        throw InvalidArgument("Cdfa::from_rows: no states");
    }
    const std::size_t letters = rows.front().size();
    std::vector<State> table;
    table.reserve(rows.size() * letters);
    for (const auto& r : rows) {
        if (r.size() != letters) {
            throw InvalidArgument("Cdfa::from_rows: ragged transition rows");
        }
        table.insert(table.end(), r.begin(), r.end());
    }
    return Cdfa(letters, rows.size(), initial, StateSet::of(rows.size(), finals), std::move(table),
                std::move(labels));
}

Transformation Cdfa::action(Letter a) const {
    if (a >= letter_count_) {
        throw InvalidLetter("letter " + std::to_string(a) + " outside alphabet of size " + std::to_string(letter_count_));
    }
    std::vector<Point> image(state_count_);
    for (std::size_t q = 0; q < state_count_; ++q) {
        image[q] = target(static_cast<State>(q), a);
    }
    return Transformation(std::move(image));
}

Cdfa Cdfa::with_finals(StateSet finals) const {
    return Cdfa(letter_count_, state_count_, initial_, std::move(finals), table_, labels_);
}

State run(const Cdfa& a, std::span<const Letter> word) {
    State q = a.initial();
    for (Letter l : word) {
        if (l >= a.letter_count()) {
            throw InvalidLetter("letter " + std::to_string(l) + " outside alphabet of size " +
                                std::to_string(a.letter_count()));
        }
        q = a.target(q, l);
    }
    return q;
}

bool accepts(const Cdfa& a, std::span<const Letter> word) {
    return a.is_final(run(a, word));
}

AccessiblePart accessible_part(const Cdfa& a) {
    constexpr State unseen = std::numeric_limits<State>::max();
    std::vector<State> new_of(a.state_count(), unseen);
    std::vector<State> original_of;
    new_of[a.initial()] = 0;
    original_of.push_back(a.initial());
    for (std::size_t head = 0; head < original_of.size(); ++head) {
        for (State t : a.row(original_of[head])) {
            if (new_of[t] == unseen) {
                new_of[t] = static_cast<State>(original_of.size());
                original_of.push_back(t);
            }
        }
    }
    const std::size_t n = original_of.size();
    std::vector<State> table(n * a.letter_count());
    StateSet finals(n);
    for (std::size_t q = 0; q < n; ++q) {
        auto row = a.row(original_of[q]);
        for (std::size_t l = 0; l < row.size(); ++l) {
            table[q * a.letter_count() + l] = new_of[row[l]];
        }
        if (a.is_final(original_of[q])) {
            finals.insert(static_cast<State>(q));
        }
    }
    return {Cdfa(a.letter_count(), n, 0, std::move(finals), std::move(table), a.labels()), std::move(original_of)};
}

Partition moore_partition(const Cdfa& a) {
    const std::size_t n = a.state_count();
    const std::size_t letters = a.letter_count();
    Partition p;
    p.block_of.assign(n, 0);

    // Initial split by finality, numbered by first appearance.
    {
        int final_block = -1;
        int other_block = -1;
        std::uint32_t next = 0;
        for (std::size_t q = 0; q < n; ++q) {
            int& slot = a.is_final(static_cast<State>(q)) ? final_block : other_block;
            if (slot < 0) {
                slot = static_cast<int>(next++);
            }
            p.block_of[q] = static_cast<std::uint32_t>(slot);
        }
        p.block_count = next;
    }

    std::vector<std::uint32_t> signature(letters + 1);
    std::vector<std::uint32_t> next_block(n);
    while (true) {
        std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, detail::SequenceHash> ids;
        ids.reserve(p.block_count * 2);
        for (std::size_t q = 0; q < n; ++q) {
            signature[0] = p.block_of[q];
            auto row = a.row(static_cast<State>(q));
            for (std::size_t l = 0; l < letters; ++l) {
                signature[l + 1] = p.block_of[row[l]];
            }
            auto [it, inserted] = ids.try_emplace(signature, static_cast<std::uint32_t>(ids.size()));
            next_block[q] = it->second;
        }
        const bool stable = ids.size() == p.block_count;
        p.block_of.swap(next_block);
        p.block_count = ids.size();
        if (stable) {
            break;
        }
    }
    return p;
}

Cdfa minimize(const Cdfa& a) {
    const Cdfa reachable = accessible_part(a).automaton;
    const Partition p = moore_partition(reachable);
    const std::size_t letters = reachable.letter_count();
    std::vector<State> table(p.block_count * letters);
    std::vector<bool> filled(p.block_count, false);
    StateSet finals(p.block_count);
    for (std::size_t q = 0; q < reachable.state_count(); ++q) {
        const auto b = p.block_of[q];
        if (filled[b]) {
            continue;
        }
        filled[b] = true;
        auto row = reachable.row(static_cast<State>(q));
        for (std::size_t l = 0; l < letters; ++l) {
            table[b * letters + l] = p.block_of[row[l]];
        }
        if (reachable.is_final(static_cast<State>(q))) {
            finals.insert(b);
        }
    }
    Cdfa quotient(letters, p.block_count, p.block_of[reachable.initial()], std::move(finals), std::move(table),
                  reachable.labels());
    return accessible_part(quotient).automaton;
}

std::optional<Word> distinguishing_word(const Cdfa& a, const Cdfa& b) {
    if (a.letter_count() != b.letter_count()) {
        throw IncomparableAlphabets("automata have " + std::to_string(a.letter_count()) + " and " +
                                    std::to_string(b.letter_count()) + " letters");
    }
    struct Visit {
        std::uint64_t parent;
        Letter letter;
    };
    const std::uint64_t width = b.state_count();
    auto key = [width](State p, State q) { return std::uint64_t{p} * width + q; };
    std::unordered_map<std::uint64_t, Visit> visited;
    std::deque<std::uint64_t> queue;
    const auto start = key(a.initial(), b.initial());
    visited.emplace(start, Visit{start, 0});
    queue.push_back(start);
    while (!queue.empty()) {
        const auto current = queue.front();
        queue.pop_front();
        const auto p = static_cast<State>(current / width);
        const auto q = static_cast<State>(current % width);
        if (a.is_final(p) != b.is_final(q)) {
            Word word;
            for (auto k = current; k != start; k = visited.at(k).parent) {
                word.push_back(visited.at(k).letter);
            }
            std::reverse(word.begin(), word.end());
            return word;
        }
        for (Letter l = 0; l < a.letter_count(); ++l) {
            const auto next = key(a.target(p, l), b.target(q, l));
            if (visited.emplace(next, Visit{current, l}).second) {
                queue.push_back(next);
            }
        }
    }
    return std::nullopt;
}

bool equivalent(const Cdfa& a, const Cdfa& b) {
    return !distinguishing_word(a, b).has_value();
}

Cdfa rename_letters(const Cdfa& a, std::span<const Letter> sigma) {
    const std::size_t letters = a.letter_count();
    if (sigma.size() != letters) {
        throw InvalidArgument("rename_letters: renaming has " + std::to_string(sigma.size()) + " entries for " +
                              std::to_string(letters) + " letters");
    }
    std::vector<bool> hit(letters, false);
    for (Letter l : sigma) {
        if (l >= letters || hit[l]) {
            throw InvalidArgument("rename_letters: renaming is not a bijection");
        }
        hit[l] = true;
    }
    std::vector<State> table(a.table().size());
    std::vector<std::string> labels(letters);
    for (std::size_t q = 0; q < a.state_count(); ++q) {
        for (std::size_t l = 0; l < letters; ++l) {
            table[q * letters + sigma[l]] = a.target(static_cast<State>(q), static_cast<Letter>(l));
        }
    }
    for (std::size_t l = 0; l < letters; ++l) {
        labels[sigma[l]] = a.labels()[l];
    }
    return Cdfa(letters, a.state_count(), a.initial(), a.finals(), std::move(table), std::move(labels));
}

Cdfa restrict_alphabet(const Cdfa& a, std::span<const Letter> keep) {
    if (keep.empty()) {
        throw InvalidArgument("restrict_alphabet: must keep at least one letter");
    }
    std::vector<bool> hit(a.letter_count(), false);
    for (Letter l : keep) {
        if (l >= a.letter_count() || hit[l]) {
            throw InvalidArgument("restrict_alphabet: letters to keep must be distinct and in range");
        }
        hit[l] = true;
    }
    std::vector<State> table;
    table.reserve(a.state_count() * keep.size());
    for (std::size_t q = 0; q < a.state_count(); ++q) {
        for (Letter l : keep) {
            table.push_back(a.target(static_cast<State>(q), l));
        }
    }
    return Cdfa(keep.size(), a.state_count(), a.initial(), a.finals(), std::move(table), select_labels(a, keep));
}

std::vector<Word> enumerate_accepted(const Cdfa& a, std::size_t max_len, std::uint64_t budget) {
    std::uint64_t total = 0;
    std::uint64_t level_size = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
        total = std::min(total + level_size, std::numeric_limits<std::uint64_t>::max() - 1);
        level_size = saturating_mul(level_size, a.letter_count());
    }
    if (total > budget) {
        throw BudgetExceeded("enumerate_accepted up to length " + std::to_string(max_len), total, budget);
    }

    std::vector<Word> accepted;
    std::vector<std::pair<Word, State>> level{{Word{}, a.initial()}};
    for (std::size_t len = 0;; ++len) {
        for (const auto& [word, q] : level) {
            if (a.is_final(q)) {
                accepted.push_back(word);
            }
        }
        if (len == max_len) {
            break;
        }
        std::vector<std::pair<Word, State>> next;
        next.reserve(level.size() * a.letter_count());
        for (const auto& [word, q] : level) {
            for (Letter l = 0; l < a.letter_count(); ++l) {
                Word w = word;
                w.push_back(l);
                next.emplace_back(std::move(w), a.target(q, l));
            }
        }
        level = std::move(next);
    }
    return accepted;
}

DedupedLetters dedupe_letters(const Cdfa& a) {
    std::unordered_map<std::vector<State>, Letter, detail::SequenceHash> column_ids;
    std::vector<Letter> class_of(a.letter_count());
    std::vector<Letter> representatives;
    std::vector<State> column(a.state_count());
    for (Letter l = 0; l < a.letter_count(); ++l) {
        for (std::size_t q = 0; q < a.state_count(); ++q) {
            column[q] = a.target(static_cast<State>(q), l);
        }
        auto [it, inserted] = column_ids.try_emplace(column, static_cast<Letter>(representatives.size()));
        if (inserted) {
            representatives.push_back(l);
        }
        class_of[l] = it->second;
    }
    return {restrict_alphabet(a, representatives), std::move(class_of)};
}

} // namespace sct
