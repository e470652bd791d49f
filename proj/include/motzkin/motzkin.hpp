#pragma once

#include "motzkin/errors.hpp"
#include "motzkin/gf/closed_forms.hpp"
#include "motzkin/gf/columns.hpp"
#include "motzkin/gf/contfrac.hpp"
#include "motzkin/gf/diagonal.hpp"
#include "motzkin/gf/published.hpp"
#include "motzkin/gf/special.hpp"
#include "motzkin/gf/table.hpp"
#include "motzkin/paths/oracle.hpp"
#include "motzkin/paths/path.hpp"
#include "motzkin/series/bigint.hpp"
#include "motzkin/series/dense_poly.hpp"
#include "motzkin/series/marker_poly.hpp"
#include "motzkin/series/series.hpp"
