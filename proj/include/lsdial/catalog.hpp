#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "lsdial/algebra.hpp"
#include "lsdial/weights.hpp"

namespace lsdial {

// The six two-dimensional classes, each a family of structure constants in
// up to two parameters from {a, b, c}.
enum class ClassId { L1, L2, L3, L4, L5, L6 };

inline constexpr std::array<ClassId, 6> kAllClasses = {ClassId::L1, ClassId::L2, ClassId::L3,
                                                       ClassId::L4, ClassId::L5, ClassId::L6};

inline const char* class_name(ClassId c) {
    switch (c) {
        case ClassId::L1: return "L1";
        case ClassId::L2: return "L2";
        case ClassId::L3: return "L3";
        case ClassId::L4: return "L4";
        case ClassId::L5: return "L5";
        case ClassId::L6: return "L6";
    }
    return "?";
}

inline ClassId parse_class_id(std::string_view text) {
    for (ClassId c : kAllClasses)
        if (text == class_name(c)) return c;
    throw ParseError("unknown class '" + std::string(text) + "' (expected L1..L6)");
}

struct ClassParams {
    std::optional<Rational> a;
    std::optional<Rational> b;
    std::optional<Rational> c;

    bool operator==(const ClassParams&) const = default;
};

struct ParamUse {
    bool a = false;
    bool b = false;
    bool c = false;
};

inline ParamUse class_params_used(ClassId cls) {
    switch (cls) {
        case ClassId::L1: return {true, true, false};
        case ClassId::L2: return {false, true, true};
        case ClassId::L3: return {false, true, false};
        case ClassId::L4: return {false, false, true};
        case ClassId::L5: return {true, false, true};
        case ClassId::L6: return {true, false, false};
    }
    throw InternalInconsistency("unknown class id");
}

struct ClassSpec {
    ClassId id;
    ClassParams params;

    bool operator==(const ClassSpec&) const = default;
};

// Sample values a=2, b=3, c=5, restricted to the parameters the class takes.
// Each satisfies the class constraints, so every class instantiates.
inline ClassSpec default_sample_params(ClassId cls) {
    const ParamUse use = class_params_used(cls);
    ClassParams p;
    if (use.a) p.a = 2;
    if (use.b) p.b = 3;
    if (use.c) p.c = 5;
    return {cls, p};
}

namespace detail {

inline Rational require_param(ClassId cls, const std::optional<Rational>& v, const char* name) {
    if (!v)
        throw ConstraintViolation(std::string(class_name(cls)) + " requires parameter " + name);
    return *v;
}

}  // namespace detail

// Structure constants of one class member on the basis (e_1, e_2). Throws
// when a required parameter is missing or a parameter constraint fails.
inline Algebra instantiate(ClassId cls, const ClassParams& params) {
    Algebra alg(2);
    switch (cls) {
        case ClassId::L1: {
            const Rational a = detail::require_param(cls, params.a, "a");
            const Rational b = detail::require_param(cls, params.b, "b");
            if (a == 0) throw ConstraintViolation("L1 requires a != 0");
            alg.set_left(0, 1, 0, 1);
            alg.set_left(1, 1, 1, 1);
            alg.set_right(1, 0, 0, a);
            alg.set_right(1, 1, 0, b);
            alg.set_right(1, 1, 1, 1);
            break;
        }
        case ClassId::L2: {
            const Rational b = detail::require_param(cls, params.b, "b");
            const Rational c = detail::require_param(cls, params.c, "c");
            if (c == 0) throw ConstraintViolation("L2 requires c != 0");
            alg.set_left(0, 1, 0, 1);
            alg.set_left(1, 1, 0, c);
            alg.set_left(1, 1, 1, 1);
            alg.set_right(1, 1, 0, b);
            alg.set_right(1, 1, 1, 1);
            break;
        }
        case ClassId::L3: {
            const Rational b = detail::require_param(cls, params.b, "b");
            alg.set_left(0, 1, 0, 1);
            alg.set_left(1, 1, 1, 1);
            alg.set_right(1, 1, 0, b);
            alg.set_right(1, 1, 1, 1);
            break;
        }
        case ClassId::L4: {
            const Rational c = detail::require_param(cls, params.c, "c");
            alg.set_left(1, 1, 0, c);
            alg.set_left(1, 1, 1, 1);
            alg.set_right(1, 0, 0, 1);
            alg.set_right(1, 1, 1, 1);
            break;
        }
        case ClassId::L5: {
            const Rational a = detail::require_param(cls, params.a, "a");
            const Rational c = detail::require_param(cls, params.c, "c");
            if (a == 1) throw ConstraintViolation("L5 requires a != 1");
            alg.set_left(1, 1, 0, c);
            alg.set_left(1, 1, 1, 1);
            alg.set_right(1, 0, 0, a);
            alg.set_right(1, 1, 0, c * (Rational(1) - a));
            alg.set_right(1, 1, 1, 1);
            break;
        }
        case ClassId::L6: {
            const Rational a = detail::require_param(cls, params.a, "a");
            if (a == 0) throw ConstraintViolation("L6 requires a != 0");
            alg.set_left(1, 1, 1, 1);
            alg.set_right(1, 0, 0, a);
            alg.set_right(1, 1, 1, 1);
            break;
        }
    }
    return alg;
}

inline Algebra instantiate(const ClassSpec& spec) {
    return instantiate(spec.id, spec.params);
}

// Reference dimensions bundled for regression comparison, stored verbatim,
// one row per class in the canonical family order D111, D110, D101, D100,
// D011, D001, D010, D01d. Computed dimensions are compared against these;
// where they disagree the comparison report carries the evidence.
inline std::size_t expected_dimension(ClassId cls, WeightFamily family) {
    static constexpr std::array<std::array<std::size_t, 8>, 6> table = {{
        {1, 1, 1, 0, 0, 0, 0, 1},
        {0, 1, 1, 0, 0, 2, 0, 1},
        {1, 2, 1, 0, 0, 2, 0, 1},
        {1, 2, 2, 0, 0, 0, 2, 1},
        {1, 1, 2, 0, 0, 0, 2, 1},
        {1, 1, 2, 0, 0, 0, 2, 2},
    }};
    for (std::size_t f = 0; f < kCanonicalFamilies.size(); ++f)
        if (kCanonicalFamilies[f] == family) return table[static_cast<std::size_t>(cls)][f];
    throw ShapeMismatch("no reference dimension for this family");
}

// Static oddity note attached to one reference cell: the published entry for
// L4 at D110 is written in terms of parameter b, which L4 does not take.
inline const char* reference_note(ClassId cls, WeightFamily family) {
    if (cls == ClassId::L4 && family == WeightFamily::D110)
        return "reference cell pattern uses parameter b, which L4 does not take";
    return nullptr;
}

}  // namespace lsdial
