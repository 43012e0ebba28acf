#ifndef NZFLOW_NZFLOW_HPP
#define NZFLOW_NZFLOW_HPP

#include "abelian.hpp"
#include "assigning.hpp"
#include "catalog.hpp"
#include "errors.hpp"
#include "flows.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "polynomial.hpp"
#include "verify.hpp"

#endif  // NZFLOW_NZFLOW_HPP
