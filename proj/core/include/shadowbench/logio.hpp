#pragma once

#include <filesystem>
#include <string>

#include "shadowbench/shadowing.hpp"

namespace shadowbench {

// JSON-lines serialization of a playthrough: a header record, one record
// per tick, then an outcome record. Field names and order are frozen in
// docs/logschema.md; NaN action values serialize as null. Output is
// byte-stable for identical logs.
std::string playthrough_to_jsonl(const PlaythroughLog& log);
PlaythroughLog playthrough_from_jsonl(const std::string& text);

void write_playthrough(const std::filesystem::path& file, const PlaythroughLog& log);
PlaythroughLog read_playthrough(const std::filesystem::path& file);

}  // namespace shadowbench
