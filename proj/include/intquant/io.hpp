#ifndef INTQUANT_IO_HPP
#define INTQUANT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace intquant {

// Reads one loss per line, optionally preceded by a "loss" header.  Blank
// lines are skipped; anything non-numeric or non-finite raises DataError with
// the 1-based line number.
std::vector<double> read_losses(std::istream& in, const std::string& source);

// read_losses on a file path; DataError when the file cannot be opened.
std::vector<double> read_losses_file(const std::string& path);

// Shortest round-trippable-ish decimal: printf %.12g.  Every number the tool
// emits goes through this one function so output bytes are stable.
std::string format_g12(double v);

}  // namespace intquant

#endif
