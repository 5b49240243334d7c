#include "tmsv/fock_io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace tmsv {

namespace {

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> bytes{};
  for (std::size_t i = 0; i < 8; ++i) {
    bytes[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  }
  out.write(bytes.data(), 8);
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), 8);
  if (!in) {
    throw std::runtime_error("snapshot truncated");
  }
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  }
  return v;
}

void put_f64(std::ostream& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }
double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

}  // namespace

void write_snapshot(std::ostream& out, const FockDensityMatrix& state, double time,
                    const BathParams& bath) {
  put_u64(out, static_cast<std::uint64_t>(static_cast<std::int64_t>(state.nmax())));
  put_u64(out, state.is_partial_transpose() ? 1u : 0u);
  put_f64(out, time);
  put_f64(out, bath.gain());
  put_f64(out, bath.loss());
  for (double v : state.elements()) {
    put_f64(out, v);
  }
  if (!out) {
    throw std::runtime_error("failed to write snapshot");
  }
}

FockSnapshot read_snapshot(std::istream& in) {
  const auto nmax = static_cast<std::int64_t>(get_u64(in));
  const auto flag = get_u64(in);
  if (nmax < 0 || nmax > 200 || flag > 1) {
    throw std::runtime_error("snapshot header is malformed");
  }
  const double time = get_f64(in);
  const double gain = get_f64(in);
  const double loss = get_f64(in);
  FockSnapshot snap{FockDensityMatrix(static_cast<int>(nmax), flag == 1), time,
                    BathParams(gain, loss)};
  for (double& v : snap.state.elements()) {
    v = get_f64(in);
  }
  return snap;
}

}  // namespace tmsv
