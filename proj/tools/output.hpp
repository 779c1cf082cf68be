#pragma once

#include <string>

#include "json.hpp"

#include "cpstar/context.hpp"
#include "cpstar/verify.hpp"

namespace cpstar::cli {

enum class Format { json, latex, text };

nlohmann::json to_json(const LaurentElem& e);
nlohmann::json to_json(const LSeries& s);
nlohmann::json to_json(const Report& r);

std::string latex(const LaurentElem& e);
std::string latex(const LSeries& s);
std::string latex(const Rational& r);

}  // namespace cpstar::cli
