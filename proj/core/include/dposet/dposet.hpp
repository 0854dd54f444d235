#pragma once

#include "dposet/canonical.hpp"
#include "dposet/composition.hpp"
#include "dposet/double_poset.hpp"
#include "dposet/dp_algebra.hpp"
#include "dposet/enumeration.hpp"
#include "dposet/errors.hpp"
#include "dposet/linear_combination.hpp"
#include "dposet/littlewood_richardson.hpp"
#include "dposet/perm_algebra.hpp"
#include "dposet/permutation.hpp"
#include "dposet/qsym.hpp"
#include "dposet/relation.hpp"
#include "dposet/text_format.hpp"
