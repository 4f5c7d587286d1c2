#ifndef CLUSTER_A11_CLUSTER_A11_HPP
#define CLUSTER_A11_CLUSTER_A11_HPP

#include "cluster_a11/arithmetic.hpp"
#include "cluster_a11/big_coeff.hpp"
#include "cluster_a11/cluster.hpp"
#include "cluster_a11/errors.hpp"
#include "cluster_a11/fibonacci.hpp"
#include "cluster_a11/laurent_io.hpp"
#include "cluster_a11/laurent_poly.hpp"
#include "cluster_a11/monomial.hpp"

#endif  // CLUSTER_A11_CLUSTER_A11_HPP
