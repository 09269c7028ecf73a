#pragma once

// Umbrella header.
#include "quandle/census.hpp"
#include "quandle/error.hpp"
#include "quandle/finite_group.hpp"
#include "quandle/finite_quandle.hpp"
#include "quandle/free_group.hpp"
#include "quandle/free_quandle.hpp"
#include "quandle/hom_search.hpp"
#include "quandle/knot.hpp"
#include "quandle/permutation.hpp"
#include "quandle/presentation.hpp"
#include "quandle/rewrite.hpp"
#include "quandle/table_io.hpp"
#include "quandle/term.hpp"
#include "quandle/word_problem.hpp"
