#pragma once

// Explicit instantiation helper for the three supported scalar types.
#define CEN_FOR_EACH_SCALAR(MACRO) \
    MACRO(::cen::Rational)         \
    MACRO(::cen::ModP)             \
    MACRO(::cen::Quaternion)

#define CEN_FOR_EACH_FIELD(MACRO) \
    MACRO(::cen::Rational)        \
    MACRO(::cen::ModP)
