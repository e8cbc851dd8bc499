#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eggbox {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct cap_exceeded : error {
  using error::error;
};

struct budget_exceeded : error {
  using error::error;
};

struct not_an_ideal : error {
  using error::error;
};

// Carries the triple (x, y, z) with x ~ y but [xz] != [yz] or [zx] != [zy].
struct not_a_congruence : error {
  std::uint32_t x, y, z;
  not_a_congruence(std::string msg, std::uint32_t x_, std::uint32_t y_, std::uint32_t z_)
      : error(std::move(msg)), x(x_), y(y_), z(z_) {}
};

struct unknown_name : error {
  using error::error;
};

struct not_completely_regular : error {
  using error::error;
};

struct unknown_lemma : error {
  using error::error;
};

struct not_nested : error {
  using error::error;
};

struct not_normal : error {
  using error::error;
};

struct bad_index : error {
  using error::error;
};

struct not_a_factor : error {
  using error::error;
};

struct bad_exponent : error {
  using error::error;
};

struct unbound_variable : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

struct bad_file : error {
  using error::error;
};

}  // namespace eggbox
