#pragma once

#include <stdexcept>
#include <string>

namespace pgq {

enum class Errc {
  malformed_table,
  out_of_range,
  not_bijective,
  even_order,
  not_unit,
  no_unique_solution,
  order_cap_exceeded,
  not_subgroup,
  not_surjective,
  invalid_decomposition,
  not_p_groupoid,
  bad_argument,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pgq
