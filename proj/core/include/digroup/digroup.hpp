#ifndef DIGROUP_DIGROUP_HPP_
#define DIGROUP_DIGROUP_HPP_

#include "digroup/core.hpp"
#include "digroup/enumerator.hpp"
#include "digroup/io.hpp"
#include "digroup/morphism.hpp"
#include "digroup/standard_triple.hpp"
#include "digroup/subdigroup.hpp"
#include "digroup/table.hpp"
#include "digroup/translations.hpp"
#include "digroup/validation.hpp"

#endif  // DIGROUP_DIGROUP_HPP_
