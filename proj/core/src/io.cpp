/*
 * Copyright 2026 The superrec authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "superrec/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace superrec {

namespace {

using OrderedJson = nlohmann::ordered_json;

Poly parse_value(const ContextPtr& ctx, const nlohmann::json& v) {
  if (v.is_number_integer())
    return Poly::constant(ctx, Rational(v.get<long>()));
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    int sym = ctx->find(s);
    if (sym >= 0) return Poly::symbol(ctx, sym);
    return Poly::constant(ctx, rational_from_string(s));
  }
  if (v.is_array()) {  // the term-record form used by exports
    Poly p = Poly::zero(ctx);
    for (const auto& t : v) {
      ExpVec e = t.at("exponents").get<ExpVec>();
      Rational c(t.at("numerator").get<std::string>() + "/" +
                 t.at("denominator").get<std::string>());
      c.canonicalize();
      p += Poly::monomial(ctx, std::move(e), c);
    }
    return p;
  }
  throw std::invalid_argument("curve file: values are rationals or symbols");
}

// Prefer the human form ("p/q" or a symbol name) and fall back to term
// records for genuinely polynomial values.
OrderedJson value_to_json(const ContextPtr& ctx, const Poly& p);

OrderedJson poly_to_json(const Poly& p);

OrderedJson value_to_json(const ContextPtr& ctx, const Poly& p) {
  if (p.is_zero()) return OrderedJson("0");
  if (p.is_single_term()) {
    const auto& [e, c] = *p.terms().begin();
    bool constant = true;
    int sym = -1, exp = 0;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) {
        if (sym >= 0) constant = false;
        sym = static_cast<int>(i);
        exp = e[i];
      }
    if (sym < 0) return OrderedJson(rational_to_string(c));
    if (constant && exp == 1 && c == 1) return OrderedJson(ctx->name(sym));
  }
  return poly_to_json(p);
}

OrderedJson poly_to_json(const Poly& p) {
  OrderedJson terms = OrderedJson::array();
  for (const auto& [e, c] : p.terms()) {
    OrderedJson t;
    t["exponents"] = e;
    t["numerator"] = c.get_num().get_str();
    t["denominator"] = c.get_den().get_str();
    terms.push_back(t);
  }
  return terms;
}

}  // namespace

SuperCurve parse_curve_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::string> extra;
  if (j.contains("symbols"))
    extra = j["symbols"].get<std::vector<std::string>>();
  auto ctx = std::make_shared<const Context>(extra);
  SuperCurve c;
  c.ctx = ctx;
  const std::string sector = j.at("sector").get<std::string>();
  if (sector == "NS")
    c.sector = Sector::ns;
  else if (sector == "R")
    c.sector = Sector::r;
  else
    throw std::invalid_argument("curve file: sector must be NS or R");
  c.N = j.at("N").get<int>();
  for (const auto& item : j.value("tau", nlohmann::json::array()))
    c.tau[item.at(0).get<int>()] = parse_value(ctx, item.at(1));
  for (const auto& item : j.value("Q", nlohmann::json::array()))
    c.Q[item.at(0).get<int>()] = parse_value(ctx, item.at(1));
  for (const auto& item : j.value("D", nlohmann::json::array()))
    c.D[item.at(0).get<int>()] = parse_value(ctx, item.at(1));
  for (const auto& item : j.value("phi", nlohmann::json::array()))
    c.phi[{item.at(0).get<int>(), item.at(1).get<int>()}] =
        parse_value(ctx, item.at(2));
  for (const auto& item : j.value("psi", nlohmann::json::array()))
    c.psi[{item.at(0).get<int>(), item.at(1).get<int>()}] =
        parse_value(ctx, item.at(2));
  c.complete_psi();
  return c;
}

SuperCurve load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curve_json(ss.str());
}

std::string curve_to_json(const SuperCurve& curve) {
  OrderedJson j;
  j["sector"] = sector_name(curve.sector);
  j["N"] = curve.N;
  std::vector<std::string> extra;
  for (int i = Context::kHHalf + 1; i < curve.ctx->size(); ++i)
    extra.push_back(curve.ctx->name(i));
  if (!extra.empty()) j["symbols"] = extra;
  auto dump_map = [&](const std::map<int, Poly>& m) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& [k, v] : m)
      arr.push_back({k, value_to_json(curve.ctx, v)});
    return arr;
  };
  auto dump_pairs = [&](const std::map<std::pair<int, int>, Poly>& m) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& [kl, v] : m)
      arr.push_back({kl.first, kl.second, value_to_json(curve.ctx, v)});
    return arr;
  };
  j["tau"] = dump_map(curve.tau);
  j["Q"] = dump_map(curve.Q);
  j["D"] = dump_map(curve.D);
  j["phi"] = dump_pairs(curve.phi);
  j["psi"] = dump_pairs(curve.psi);
  return j.dump(2) + "\n";
}

std::string table_to_json(const CoeffTable& table) {
  OrderedJson j;
  j["chi_max"] = table.chi_max();
  j["index_bound"] = table.index_bound();
  OrderedJson cells = OrderedJson::array();
  for (const auto& [key, value] : table.entries()) {
    OrderedJson cell;
    cell["two_g"] = key.two_g;
    cell["bos_indices"] = key.bos;
    cell["fer_indices"] = key.fer;
    cell["poly_terms"] = poly_to_json(value);
    cells.push_back(cell);
  }
  j["cells"] = cells;
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

std::string lambda_series_to_json(const Poly& series, int lambda_order) {
  OrderedJson j;
  j["lambda_order"] = lambda_order;
  OrderedJson records = OrderedJson::array();
  for (int l = 0; l <= lambda_order; ++l) {
    Poly coeff = Poly::zero(series.context());
    for (const auto& [e, c] : series.terms()) {
      if (e[Context::kLambda] != l) continue;
      ExpVec e2 = e;
      e2[Context::kLambda] = 0;
      coeff += Poly::monomial(series.context(), e2, c);
    }
    if (coeff.is_zero() && l > 0) continue;
    OrderedJson rec;
    rec["lambda_exponent"] = l;
    rec["poly_terms"] = poly_to_json(coeff);
    records.push_back(rec);
  }
  j["coefficients"] = records;
  return j.dump(2) + "\n";
}

}  // namespace superrec
