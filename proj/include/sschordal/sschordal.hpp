#ifndef SSCHORDAL_SSCHORDAL_HPP
#define SSCHORDAL_SSCHORDAL_HPP

#include <sschordal/chordality.hpp>
#include <sschordal/classes.hpp>
#include <sschordal/digraph.hpp>
#include <sschordal/harness.hpp>
#include <sschordal/io.hpp>
#include <sschordal/knotting.hpp>
#include <sschordal/patterns.hpp>

#endif
