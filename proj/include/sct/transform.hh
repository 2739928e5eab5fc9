// transform.hh -- total functions on [0, n): the letters of monsters
//
// Composition convention: compose(outer, inner)(x) = outer(inner(x)), i.e. the
// inner transformation acts first. Postfix notation `x t` used for automaton
// actions maps to this as follows: reading a then b acts as
// compose(delta_b, delta_a).

#pragma once

#include "sct/state_set.hh"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sct {

using Point = State;

class Transformation {
public:
    Transformation() = default;
    /// Throws InvalidArgument when the image is empty or an entry is >= image.size().
    explicit Transformation(std::vector<Point> image);

    std::size_t size() const noexcept { return image_.size(); }
    Point operator()(Point x) const { return image_[x]; }
    std::span<const Point> image() const noexcept { return image_; }

    bool is_permutation() const;
    bool is_identity() const;

    /// "[012]" for n <= 10, "[0,1,...,10]" otherwise.
    std::string to_string() const;

    auto operator<=>(const Transformation&) const = default;

private:
    std::vector<Point> image_;
};

Transformation make_identity(std::size_t n);

/// support[k] -> support[k+1] cyclically, every other point fixed.
Transformation make_cycle(std::size_t n, std::span<const Point> support);
Transformation make_cycle(std::size_t n, std::initializer_list<Point> support);

/// The contraction sending i to j and fixing everything else; requires i != j.
Transformation make_contraction(std::size_t n, Point i, Point j);

/// g_{a,b}: every point of `finals` goes to a, every other point to b.
Transformation make_gab(std::size_t n, const StateSet& finals, Point a, Point b);

/// outer(inner(x)); throws InvalidArgument when the domains differ.
Transformation compose(const Transformation& outer, const Transformation& inner);

/// Largest n for which n^n fits in 64 bits.
inline constexpr std::size_t max_encodable_domain = 15;

/// Mixed radix: sum over i of image[i] * n^i.
std::uint64_t encode(const Transformation& t);
/// Inverse of encode; throws OutOfRange when index >= n^n.
Transformation decode(std::size_t n, std::uint64_t index);
/// n^n, throwing OutOfRange past max_encodable_domain.
std::uint64_t transformation_count(std::size_t n);

/// Monoid generated by a set of transformations, in breadth-first order.
///
/// words[k] lists the generator indices whose successive application from the
/// identity reaches elements[k] (first index acts first). elements[0] is the
/// identity with the empty word.
struct Closure {
    std::vector<Transformation> elements;
    std::vector<std::vector<std::size_t>> words;

    std::size_t size() const noexcept { return elements.size(); }
    bool contains(const Transformation& t) const;
};

/// Throws InvalidArgument when a generator's domain is not n.
Closure closure(std::size_t n, std::span<const Transformation> generators);

} // namespace sct
