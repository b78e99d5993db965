#pragma once

#include <initializer_list>

#include "addix/field.hpp"

namespace testing_util {

inline addix::Elem el(const addix::FieldCtx& ctx, std::initializer_list<std::uint32_t> digits) {
    addix::Digits d(digits);
    d.resize(ctx.n(), 0);
    return ctx.from_digits(d);
}

}  // namespace testing_util
