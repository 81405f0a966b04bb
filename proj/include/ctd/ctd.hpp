#ifndef CTD_CTD_HPP
#define CTD_CTD_HPP

#include "ctd/canonical.hpp"
#include "ctd/equivalence.hpp"
#include "ctd/invariants.hpp"
#include "ctd/modp.hpp"
#include "ctd/mutation_analysis.hpp"
#include "ctd/mutation_class.hpp"
#include "ctd/polynomial.hpp"
#include "ctd/quiver.hpp"
#include "ctd/relations.hpp"
#include "ctd/type_a.hpp"
#include "ctd/type_d.hpp"

#endif
