#include "evagent/shop/catalog.hpp"

#include <fstream>

namespace evagent::shop {

using nlohmann::json;

void to_json(json& j, const Product& p) {
    j = json{{"id", p.id}, {"title", p.title}, {"attributes", p.attributes}, {"options", p.options}, {"price", p.price}};
}

void from_json(const json& j, Product& p) {
    p.id = j.at("id").get<std::string>();
    p.title = j.at("title").get<std::string>();
    p.attributes = j.value("attributes", std::set<std::string>{});
    p.options = j.value("options", std::map<std::string, std::vector<std::string>>{});
    p.price = j.at("price").get<double>();
}

void to_json(json& j, const TaskSpec& t) {
    j = json{{"id", t.id},
             {"instruction", t.instruction},
             {"target_attributes", t.target_attributes},
             {"target_options", t.target_options},
             {"price_cap", t.price_cap}};
}

void from_json(const json& j, TaskSpec& t) {
    t.id = j.at("id").get<std::string>();
    t.instruction = j.at("instruction").get<std::string>();
    t.target_attributes = j.at("target_attributes").get<std::set<std::string>>();
    t.target_options = j.value("target_options", std::map<std::string, std::string>{});
    t.price_cap = j.at("price_cap").get<double>();
}

Catalog::Catalog(std::vector<Product> products) : products_(std::move(products)) {
    std::set<std::string> seen;
    for (const auto& p : products_) {
        if (p.id.empty() || p.title.empty()) throw ShopError(ShopError::Kind::bad_data, "product needs an id and a title");
        if (p.price < 0.0) throw ShopError(ShopError::Kind::bad_data, "product " + p.id + " has a negative price");
        if (!seen.insert(p.id).second) throw ShopError(ShopError::Kind::bad_data, "duplicate product id " + p.id);
        for (const auto& [name, values] : p.options) {
            if (values.empty()) throw ShopError(ShopError::Kind::bad_data, "option " + name + " of " + p.id + " has no values");
        }
    }
}

const Product* Catalog::find(const std::string& id) const {
    for (const auto& p : products_) {
        if (p.id == id) return &p;
    }
    return nullptr;
}

void check_task(const TaskSpec& t) {
    if (t.id.empty()) throw ShopError(ShopError::Kind::bad_data, "task spec needs an id");
    if (t.instruction.empty()) throw ShopError(ShopError::Kind::bad_data, "task " + t.id + " has no instruction");
    if (t.target_attributes.empty()) throw ShopError(ShopError::Kind::bad_data, "task " + t.id + " has no target attributes");
    if (t.price_cap < 0.0) throw ShopError(ShopError::Kind::bad_data, "task " + t.id + " has a negative price cap");
}

namespace {

std::vector<json> read_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ShopError(ShopError::Kind::bad_data, "cannot read '" + path + "'");
    std::vector<json> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto j = json::parse(line, nullptr, false);
        if (j.is_discarded()) throw ShopError(ShopError::Kind::bad_data, path + ":" + std::to_string(line_no) + ": not JSON");
        rows.push_back(std::move(j));
    }
    return rows;
}

}  // namespace

Catalog parse_catalog(const json& products) {
    try {
        return Catalog(products.get<std::vector<Product>>());
    } catch (const json::exception& e) {
        throw ShopError(ShopError::Kind::bad_data, std::string("bad product: ") + e.what());
    }
}

std::vector<TaskSpec> parse_tasks(const json& tasks) {
    std::vector<TaskSpec> out;
    try {
        out = tasks.get<std::vector<TaskSpec>>();
    } catch (const json::exception& e) {
        throw ShopError(ShopError::Kind::bad_data, std::string("bad task spec: ") + e.what());
    }
    std::set<std::string> seen;
    for (const auto& t : out) {
        check_task(t);
        if (!seen.insert(t.id).second) throw ShopError(ShopError::Kind::bad_data, "duplicate task id " + t.id);
    }
    return out;
}

Catalog load_catalog(const std::string& path) { return parse_catalog(json(read_jsonl(path))); }

std::vector<TaskSpec> load_tasks(const std::string& path) { return parse_tasks(json(read_jsonl(path))); }

}  // namespace evagent::shop
