// Copyright 2026 The qprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <charconv>

#include "json.hpp"
#include "qprobe/cli.hpp"

namespace qprobe::cli {

namespace {

std::string flag_name(const std::string& key) {
  std::string name = key;
  std::replace(name.begin(), name.end(), '_', '-');
  return "--" + name;
}

std::string scalar_text(const std::string& key, const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  if (v.is_number()) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v.get<double>());
    return std::string(buf, res.ptr);
  }
  throw CliError(kExitValidation, "config key '" + key + "' must be a number, string, boolean or list");
}

}  // namespace

std::vector<std::string> config_tokens(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CliError(kExitValidation, std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw CliError(kExitValidation, "config must be a JSON object");

  std::vector<std::string> tokens;
  for (const auto& [key, value] : doc.items()) {
    if (key == "config") throw CliError(kExitValidation, "config files cannot include other config files");
    const std::string flag = flag_name(key);
    if (value.is_null()) continue;
    if (value.is_boolean()) {
      tokens.push_back(flag + (value.get<bool>() ? "=true" : "=false"));
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ',';
        joined += scalar_text(key, item);
      }
      tokens.push_back(flag);
      tokens.push_back(joined);
    } else {
      tokens.push_back(flag);
      tokens.push_back(scalar_text(key, value));
    }
  }
  return tokens;
}

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::string path;
  bool found = false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) throw CliError(kExitValidation, "--config needs a path");
      path = args[++i];
      found = true;
    } else if (a.rfind("--config=", 0) == 0) {
      path = a.substr(9);
      found = true;
    } else {
      rest.push_back(a);
    }
  }
  if (!found) return args;
  if (rest.empty()) throw CliError(kExitValidation, "a subcommand is required");

  const std::vector<std::string> tokens = config_tokens(read_file(path));
  std::vector<std::string> out;
  out.push_back(rest.front());
  out.insert(out.end(), tokens.begin(), tokens.end());
  out.insert(out.end(), rest.begin() + 1, rest.end());
  return out;
}

}  // namespace qprobe::cli
