#ifndef ORDERDIM_ORDERDIM_HPP
#define ORDERDIM_ORDERDIM_HPP

#include "graph.hpp"
#include "outerplanar.hpp"
#include "poset.hpp"
#include "realizer.hpp"
#include "dimension.hpp"
#include "fixtures.hpp"

#endif
