#pragma once

#include "monutil/core/error.hpp"
#include "monutil/func/bounded_function.hpp"

#include <span>
#include <vector>

namespace monutil {

/// The convex cone generated by finitely many functions plus every
/// nonnegative function: {sum_j l_j g_j + s : l >= 0, s >= 0}.
class acceptance_cone {
  public:
    explicit acceptance_cone(space_ref space, std::vector<bounded_function> generators = {})
        : space_(std::move(space)), generators_(std::move(generators)) {
        if (!space_) throw parameter_error("acceptance_cone: null space");
        for (const auto& g : generators_) {
            if (g.space() != space_) throw space_mismatch("acceptance_cone: generator on a different space");
            if (g.sup_norm() == 0.0) throw parameter_error("acceptance_cone: zero generator");
        }
    }

    const space_ref& space() const noexcept { return space_; }
    std::span<const bounded_function> generators() const noexcept { return generators_; }

    acceptance_cone with_generator(bounded_function g) const {
        auto gens = generators_;
        gens.push_back(std::move(g));
        return acceptance_cone(space_, std::move(gens));
    }

  private:
    space_ref space_;
    std::vector<bounded_function> generators_;
};

} // namespace monutil
