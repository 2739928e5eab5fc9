#include "sct/transform.hh"

#include "sct/errors.hh"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace sct {

namespace {

void require_domain(std::size_t n, const char* where) {
    if (n == 0) {
        throw InvalidArgument(std::string(where) + ": domain size must be positive");
    }
}

void require_point(std::size_t n, Point p, const char* where) {
    if (p >= n) {
        throw InvalidArgument(std::string(where) + ": point " + std::to_string(p) + " outside [0," +
                              std::to_string(n) + ")");
    }
}

} // namespace

Transformation::Transformation(std::vector<Point> image) : image_(std::move(image)) {
    require_domain(image_.size(), "Transformation");
    for (Point p : image_) {
        require_point(image_.size(), p, "Transformation");
    }
}

bool Transformation::is_permutation() const {
    std::vector<bool> seen(image_.size(), false);
    for (Point p : image_) {
        if (seen[p]) {
            return false;
        }
        seen[p] = true;
    }
    return true;
}

bool Transformation::is_identity() const {
    for (std::size_t x = 0; x < image_.size(); ++x) {
        if (image_[x] != x) {
            return false;
        }
    }
    return true;
}

std::string Transformation::to_string() const {
    std::ostringstream os;
    os << '[';
    const bool compact = image_.size() <= 10;
    for (std::size_t x = 0; x < image_.size(); ++x) {
        if (!compact && x > 0) {
            os << ',';
        }
        os << image_[x];
    }
    os << ']';
    return os.str();
}

Transformation make_identity(std::size_t n) {
    require_domain(n, "make_identity");
    std::vector<Point> image(n);
    for (std::size_t x = 0; x < n; ++x) {
        image[x] = static_cast<Point>(x);
    }
    return Transformation(std::move(image));
}

Transformation make_cycle(std::size_t n, std::span<const Point> support) {
    require_domain(n, "make_cycle");
    std::vector<bool> seen(n, false);
    for (Point p : support) {
        require_point(n, p, "make_cycle");
        if (seen[p]) {
            throw InvalidArgument("make_cycle: point " + std::to_string(p) + " repeated in the support");
        }
        seen[p] = true;
    }
    std::vector<Point> image(n);
    for (std::size_t x = 0; x < n; ++x) {
        image[x] = static_cast<Point>(x);
    }
    for (std::size_t k = 0; k < support.size(); ++k) {
        image[support[k]] = support[(k + 1) % support.size()];
    }
    return Transformation(std::move(image));
}

Transformation make_cycle(std::size_t n, std::initializer_list<Point> support) {
    return make_cycle(n, std::span<const Point>(support.begin(), support.size()));
}

Transformation make_contraction(std::size_t n, Point i, Point j) {
    require_domain(n, "make_contraction");
    require_point(n, i, "make_contraction");
    require_point(n, j, "make_contraction");
    if (i == j) {
        throw InvalidArgument("make_contraction: a contraction must move exactly one point");
    }
    auto t = make_identity(n);
    std::vector<Point> image(t.image().begin(), t.image().end());
    image[i] = j;
    return Transformation(std::move(image));
}

Transformation make_gab(std::size_t n, const StateSet& finals, Point a, Point b) {
    require_domain(n, "make_gab");
    require_point(n, a, "make_gab");
    require_point(n, b, "make_gab");
    if (a == b) {
        throw InvalidArgument("make_gab: a and b must differ");
    }
    std::vector<Point> image(n);
    for (std::size_t x = 0; x < n; ++x) {
        image[x] = finals.contains(static_cast<State>(x)) ? a : b;
    }
    return Transformation(std::move(image));
}

Transformation compose(const Transformation& outer, const Transformation& inner) {
    if (outer.size() != inner.size()) {
        throw InvalidArgument("compose: domain sizes " + std::to_string(outer.size()) + " and " +
                              std::to_string(inner.size()) + " differ");
    }
    std::vector<Point> image(inner.size());
    for (std::size_t x = 0; x < inner.size(); ++x) {
        image[x] = outer(inner(static_cast<Point>(x)));
    }
    return Transformation(std::move(image));
}

std::uint64_t transformation_count(std::size_t n) {
    require_domain(n, "transformation_count");
    if (n > max_encodable_domain) {
        throw OutOfRange("transformation_count: n^n does not fit in 64 bits for n = " + std::to_string(n));
    }
    return saturating_pow(n, n);
}

std::uint64_t encode(const Transformation& t) {
    const std::size_t n = t.size();
    transformation_count(n);
    std::uint64_t index = 0;
    for (std::size_t x = n; x-- > 0;) {
        index = index * n + t(static_cast<Point>(x));
    }
    return index;
}

Transformation decode(std::size_t n, std::uint64_t index) {
    const std::uint64_t count = transformation_count(n);
    if (index >= count) {
        throw OutOfRange("decode: index " + std::to_string(index) + " >= " + std::to_string(count));
    }
    std::vector<Point> image(n);
    for (std::size_t x = 0; x < n; ++x) {
        image[x] = static_cast<Point>(index % n);
        index /= n;
    }
    return Transformation(std::move(image));
}

bool Closure::contains(const Transformation& t) const {
    return std::find(elements.begin(), elements.end(), t) != elements.end();
}

Closure closure(std::size_t n, std::span<const Transformation> generators) {
    require_domain(n, "closure");
    for (const auto& g : generators) {
        if (g.size() != n) {
            throw InvalidArgument("closure: generator " + g.to_string() + " is not on a domain of size " +
                                  std::to_string(n));
        }
    }
    Closure result;
    std::unordered_set<std::uint64_t> seen;
    result.elements.push_back(make_identity(n));
    result.words.emplace_back();
    seen.insert(encode(result.elements.front()));
    for (std::size_t head = 0; head < result.elements.size(); ++head) {
        for (std::size_t g = 0; g < generators.size(); ++g) {
            auto next = compose(generators[g], result.elements[head]);
            if (seen.insert(encode(next)).second) {
                auto word = result.words[head];
                word.push_back(g);
                result.elements.push_back(std::move(next));
                result.words.push_back(std::move(word));
            }
        }
    }
    return result;
}

} // namespace sct
