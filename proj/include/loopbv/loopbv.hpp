#pragma once

#include "loopbv/bv.hpp"
#include "loopbv/element.hpp"
#include "loopbv/enumerate.hpp"
#include "loopbv/hopf.hpp"
#include "loopbv/monomial.hpp"
#include "loopbv/newton.hpp"
#include "loopbv/rational.hpp"
#include "loopbv/render.hpp"
#include "loopbv/symplectic.hpp"
#include "loopbv/tensor.hpp"
