#include "spectral/tables.hpp"

#include <iomanip>
#include <sstream>

namespace spectral {

TableKind parse_table_kind(std::string_view name) {
  if (name == "classic") return TableKind::Classic;
  if (name == "extended") return TableKind::Extended;
  if (name == "complete") return TableKind::Complete;
  if (name == "product") return TableKind::Product;
  throw ParseError("unknown table '" + std::string(name) + "' (expected classic|extended|complete|product)");
}

namespace {

SignColumn column_of(KOClass c, bool keep_odd_label) {
  const KOSigns s = signs_of_class(c);
  SignColumn col{c.dim, s.eps, s.eps_prime, std::nullopt, "", c};
  if (c.parity() == Parity::Even || keep_odd_label) col.eps_dprime = s.eps_dprime;
  return col;
}

std::string cell(std::optional<Sign> s) { return s ? to_string(*s) : ""; }

// Fixed-width row: a label column then equal cells.
class Grid {
 public:
  Grid(int label_width, int cell_width) : lw_(label_width), cw_(cell_width) {}

  void row(const std::string& label, const std::vector<std::string>& cells) {
    os_ << std::left << std::setw(lw_) << label;
    for (const auto& c : cells) os_ << std::right << std::setw(cw_) << c;
    os_ << '\n';
  }
  void line(const std::string& text) { os_ << text << '\n'; }
  std::string str() const { return os_.str(); }

 private:
  int lw_;
  int cw_;
  std::ostringstream os_;
};

Json sign_json(std::optional<Sign> s) { return s ? Json(to_int(*s)) : Json(nullptr); }

Json columns_json(const std::vector<SignColumn>& cols) {
  Json out = Json::array();
  for (const auto& c : cols) {
    Json j{{"dim", c.dim},
           {"eps", to_int(c.eps)},
           {"eps_prime", to_int(c.eps_prime)},
           {"eps_dprime", sign_json(c.eps_dprime)},
           {"class", c.cls.to_string()}};
    if (!c.mark.empty()) j["mark"] = c.mark;
    out.push_back(std::move(j));
  }
  return out;
}

std::string render_columns(const std::vector<SignColumn>& cols, bool marks) {
  Grid g(14, 6);
  std::vector<std::string> dims, e, ep, edp, m, cls;
  for (const auto& c : cols) {
    dims.push_back(std::to_string(c.dim));
    e.push_back(to_string(c.eps));
    ep.push_back(to_string(c.eps_prime));
    edp.push_back(cell(c.eps_dprime));
    m.push_back(c.mark);
    cls.push_back(c.cls.to_string());
  }
  g.row("KO-dimension", dims);
  g.row("eps", e);
  g.row("eps'", ep);
  g.row("eps''", edp);
  if (marks) g.row("", m);
  g.row("class", cls);
  return g.str();
}

std::string render_product() {
  const ProductTable t = product_table();
  Grid g(6, 5);
  std::vector<std::string> head;
  for (const auto& c : all_classes()) head.push_back(c.to_string());
  g.row("", head);
  for (std::size_t i = 0; i < 16; ++i) {
    std::vector<std::string> cells;
    for (std::size_t j = 0; j < 16; ++j) cells.push_back(t[i][j] ? t[i][j]->to_string() : "");
    g.row(all_classes()[i].to_string(), cells);
  }
  return g.str();
}

}  // namespace

std::vector<SignColumn> classic_columns() {
  std::vector<SignColumn> out;
  for (int n = 0; n < 8; ++n) out.push_back(column_of(classic_class(n), false));
  return out;
}

std::vector<SignColumn> extended_columns() {
  std::vector<SignColumn> out;
  for (Sign group : {Sign::Minus, Sign::Plus}) {
    for (int n = 0; n < 8; n += 2) {
      for (Variant v : {Variant::Upper, Variant::Lower}) {
        const KOClass c{n, v};
        if (signs_of_class(c).eps_prime != group) continue;
        SignColumn col = column_of(c, false);
        col.mark = v == Variant::Upper ? "U" : "L";
        out.push_back(std::move(col));
      }
    }
  }
  for (int n = 1; n < 8; n += 2) out.push_back(column_of(classic_class(n), false));
  return out;
}

std::string render_complete(const std::array<KOSigns, 16>& table) {
  Grid g(14, 6);
  std::vector<std::string> dims;
  for (int n = 0; n < 8; ++n) dims.push_back(std::to_string(n));
  g.row("KO-dimension", dims);
  auto sign_row = [&](const std::string& name, auto field) {
    for (Variant v : {Variant::Upper, Variant::Lower}) {
      std::vector<std::string> cells;
      for (int n = 0; n < 8; ++n) {
        const std::size_t idx = static_cast<std::size_t>(n) + (v == Variant::Lower ? 8 : 0);
        const std::string text = to_string(field(table[idx]));
        const bool label = n % 2 == 1 && name == "eps''";
        cells.push_back(label ? "(" + text + ")" : text);
      }
      g.row(name + (v == Variant::Upper ? "  U" : "  L"), cells);
    }
  };
  sign_row("eps", [](const KOSigns& s) { return s.eps; });
  sign_row("eps'", [](const KOSigns& s) { return s.eps_prime; });
  sign_row("eps''", [](const KOSigns& s) { return s.eps_dprime; });
  g.line("(parenthesized: eps'' labels assigned to odd dimensions)");
  return g.str();
}

std::string render_table(TableKind kind) {
  switch (kind) {
    case TableKind::Classic:
      return render_columns(classic_columns(), false);
    case TableKind::Extended:
      return render_columns(extended_columns(), true);
    case TableKind::Complete: {
      std::array<KOSigns, 16> t;
      for (std::size_t i = 0; i < 16; ++i) t[i] = signs_of_class(all_classes()[i]);
      return render_complete(t);
    }
    case TableKind::Product:
      return render_product();
  }
  return {};
}

Json table_to_json(TableKind kind) {
  switch (kind) {
    case TableKind::Classic:
      return {{"table", "classic"}, {"columns", columns_json(classic_columns())}};
    case TableKind::Extended:
      return {{"table", "extended"}, {"columns", columns_json(extended_columns())}};
    case TableKind::Complete: {
      Json rows = Json::array();
      for (const auto& c : all_classes()) {
        const KOSigns s = signs_of_class(c);
        rows.push_back({{"class", c.to_string()},
                        {"eps", to_int(s.eps)},
                        {"eps_prime", to_int(s.eps_prime)},
                        {"eps_dprime", to_int(s.eps_dprime)},
                        {"odd_label", c.parity() == Parity::Odd}});
      }
      return {{"table", "complete"}, {"classes", rows}};
    }
    case TableKind::Product: {
      const ProductTable t = product_table();
      Json labels = Json::array();
      for (const auto& c : all_classes()) labels.push_back(c.to_string());
      Json cells = Json::array();
      for (const auto& row : t) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(c ? Json(c->to_string()) : Json(nullptr));
        cells.push_back(std::move(r));
      }
      return {{"table", "product"}, {"classes", labels}, {"cells", cells}};
    }
  }
  return {};
}

}  // namespace spectral
