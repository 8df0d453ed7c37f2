#ifndef REGLANG_REGLANG_HPP
#define REGLANG_REGLANG_HPP

#include "alphabet.hpp"
#include "automaton.hpp"
#include "bridge.hpp"
#include "dot.hpp"
#include "error.hpp"
#include "io.hpp"
#include "language.hpp"
#include "lazy_sigma_set.hpp"
#include "monoid.hpp"
#include "profinite.hpp"
#include "regex_parser.hpp"
#include "sigma_set.hpp"

#endif  // REGLANG_REGLANG_HPP
