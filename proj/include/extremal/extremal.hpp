#ifndef EXTREMAL_EXTREMAL_HPP
#define EXTREMAL_EXTREMAL_HPP

#include "extremal/classify.hpp"
#include "extremal/families.hpp"
#include "extremal/graph.hpp"
#include "extremal/invariants.hpp"
#include "extremal/io.hpp"
#include "extremal/verify.hpp"

#endif  // EXTREMAL_EXTREMAL_HPP
