#pragma once

#include "designlattice/bigint.hpp"
#include "designlattice/boolean_designs.hpp"
#include "designlattice/design.hpp"
#include "designlattice/errors.hpp"
#include "designlattice/finite_field.hpp"
#include "designlattice/group_embed.hpp"
#include "designlattice/intmatrix.hpp"
#include "designlattice/normal_form.hpp"
