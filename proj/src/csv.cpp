#include "ljsep/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ljsep {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc()) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf, res.ptr);
}

std::string csv_header(std::string_view kind, const std::vector<std::string>& columns, const CsvMetadata& meta) {
  std::string h = "# ljsep ";
  h += kToolVersion;
  h += ' ';
  h += kind;
  for (const auto& [key, value] : meta) h += ' ' + key + '=' + value;
  h += " columns=";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) h += ',';
    h += columns[i];
  }
  return h;
}

}  // namespace ljsep
