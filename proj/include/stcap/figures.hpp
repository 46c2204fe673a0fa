#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stcap/types.hpp"

// Figure sweeps emitted as CSV tables.

namespace stcap::figures {

enum class FigureId { Fig3 = 3, Fig4 = 4, Fig5 = 5, Fig6 = 6, Fig7 = 7 };

/// Throws DomainError unless 3 <= id <= 7.
FigureId figure_from_int(int id);

struct Sweep {
  double from = 0.0;
  double to = 1.0;
  int points = 64;
  bool log_spaced = false;
};

struct FigureSpec {
  FigureId id = FigureId::Fig3;
  NetworkParams params;
  OutageConstraints constraints;
  Sweep sweep;
};

/// Caption parameters and the default sweep for each figure.
FigureSpec default_spec(FigureId id);

/// Name of the swept variable (the CSV's first column).
std::string sweep_variable(FigureId id);

/// Fields fixed by the figure itself (swept, or one value per curve); they
/// cannot be overridden.
std::vector<std::string> controlled_fields(FigureId id);

/// Evenly spaced (or log-spaced) points, both ends included.
std::vector<double> sweep_grid(const Sweep& sweep);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Table compute_figure(const FigureSpec& spec);

/// Comma-separated, '.' decimal, 12 significant digits.
void write_csv(const Table& table, std::ostream& out);
std::string format_number(double value);

/// Writes the table to `output_path`, or to stdout when it is empty or "-".
void run_figure(const FigureSpec& spec, const std::string& output_path);

}  // namespace stcap::figures
