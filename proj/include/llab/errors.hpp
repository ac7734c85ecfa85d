#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace llab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed input, bad arguments, violated preconditions
struct InputError : Error {
  using Error::Error;
};

// an enumeration cap was hit
struct CapError : Error {
  using Error::Error;
};

// product requested on a word outside the domain
struct DomainError : Error {
  using Error::Error;
};

// a fact that must hold for valid inputs failed; signals a bug
struct PropertyViolation : Error {
  using Error::Error;
};

struct Caps {
  std::size_t group_order = 10000;
  std::size_t subgroup_count = 50000;
  std::size_t partial_normal_elements = 5000;
  std::size_t p_group_order = 64;
  std::size_t stored_maps = 1000000;
};

Caps& caps();

// "group=N,subgroups=N,normal=N,pgroup=N,maps=N"; unknown keys are input errors
void apply_caps_string(const std::string& spec, Caps& c);

}  // namespace llab
