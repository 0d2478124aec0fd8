// SPDX-License-Identifier: Apache-2.0

#ifndef MICAP_CSV_HPP
#define MICAP_CSV_HPP

#include <cstdint>
#include <string>

namespace micap {

/// Fixed decimal notation with the given number of significant digits and
/// trailing zeros trimmed. Never switches to scientific notation, so CSV
/// cells stay plain decimals.
std::string format_sig(double v, int sig_digits = 6);

/// Writes content verbatim (binary mode, LF endings preserved), creating
/// parent directories as needed.
void write_text_file(const std::string& path, const std::string& content);

/// Whole-file read; throws config_error when the file cannot be opened.
std::string read_text_file(const std::string& path);

} // namespace micap

#endif
