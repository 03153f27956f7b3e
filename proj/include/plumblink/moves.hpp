#ifndef PLUMBLINK_MOVES_HPP
#define PLUMBLINK_MOVES_HPP

#include <stdexcept>
#include <string>

#include "plumblink/graph.hpp"

namespace plumblink {

class NotBlowDownable : public std::runtime_error {
public:
    NotBlowDownable(const std::string& vertex, const std::string& why)
        : std::runtime_error("cannot blow down " + vertex + ": " + why) {}
};

/// Attaches a fresh vertex w (euler -1, genus 0) to v by a new edge and
/// decreases euler(v) by 1. Arrows are unchanged; w is appended after the
/// existing vertices and named b1, b2, ... (smallest unused).
PlumbingMultilink blow_up_leaf(const PlumbingMultilink& g, const std::string& v);

/// Inverse move: w must have euler -1, genus 0, no arrows and exactly one
/// incident edge; w and that edge are removed and the neighbour's euler
/// increases by 1. Throws NotBlowDownable otherwise.
PlumbingMultilink blow_down_leaf(const PlumbingMultilink& g, const std::string& w);

}  // namespace plumblink

#endif
