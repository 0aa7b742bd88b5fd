#pragma once

#include "qck/verdict.hpp"

#include <string>
#include <vector>

namespace qck {

enum class Format { json, csv };

std::string engine_version();

// Orders strings with embedded numbers by value ("n=4" before "n=10").
bool natural_less(const std::string& a, const std::string& b);

// Records sorted by case id (natural order). JSON is an array of objects, CSV has a header
// line and one newline-terminated line per record.
std::string render_report(std::vector<Verdict> verdicts, Format format);

// Writes the rendered report to path, or to stdout when path is empty or
// "-". Throws std::runtime_error on I/O failure.
void emit_report(const std::vector<Verdict>& verdicts, Format format, const std::string& path);

}  // namespace qck
