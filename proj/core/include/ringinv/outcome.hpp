#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace ringinv {

/// Why a generalized inverse could not be produced.
enum class AbsentReason {
    not_regular,            // d (or a, a^n) has no inner inverse
    unit_criterion_failed,  // u = ... + 1 - dd^- is not a unit
    no_witness,             // definitional search found nothing
    bound_exhausted,        // power scan ran past its bound
};

constexpr std::string_view to_string(AbsentReason r) noexcept {
    switch (r) {
        case AbsentReason::not_regular: return "not-regular";
        case AbsentReason::unit_criterion_failed: return "unit-criterion-failed";
        case AbsentReason::no_witness: return "no-witness";
        case AbsentReason::bound_exhausted: return "bound-exhausted";
    }
    return "unknown";
}

struct Absent {
    AbsentReason reason;
};

/// Either a value or an Absent reason. Absence is a normal answer, not an
/// error: callers distinguish failed hypotheses from failed conclusions.
template <class T>
class Outcome {
public:
    Outcome(T value) : state_(std::move(value)) {}
    Outcome(Absent absent) : state_(absent) {}

    [[nodiscard]] bool has_value() const noexcept { return state_.index() == 0; }
    explicit operator bool() const noexcept { return has_value(); }

    [[nodiscard]] const T& value() const {
        if (!has_value()) {
            throw std::logic_error("Outcome::value() on absent result (" +
                                   std::string(to_string(reason())) + ")");
        }
        return std::get<0>(state_);
    }
    const T& operator*() const { return value(); }
    const T* operator->() const { return &value(); }

    /// Only meaningful when !has_value().
    [[nodiscard]] AbsentReason reason() const noexcept {
        return has_value() ? AbsentReason::no_witness : std::get<1>(state_).reason;
    }

private:
    std::variant<T, Absent> state_;
};

}  // namespace ringinv
