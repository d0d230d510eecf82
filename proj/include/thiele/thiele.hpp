#ifndef THIELE_THIELE_HPP
#define THIELE_THIELE_HPP

#include "thiele/continued_fraction.hpp"
#include "thiele/experiments.hpp"
#include "thiele/greedy.hpp"
#include "thiele/io.hpp"
#include "thiele/minimax.hpp"
#include "thiele/nodes.hpp"
#include "thiele/sample_set.hpp"
#include "thiele/unattainable.hpp"

#endif // THIELE_THIELE_HPP
