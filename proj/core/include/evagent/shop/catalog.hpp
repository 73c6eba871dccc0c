#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "evagent/model/errors.hpp"

namespace evagent::shop {

class ShopError : public Error {
public:
    enum class Kind { empty_catalog, illegal_action, episode_over, bad_data };

    ShopError(Kind kind, std::string detail) : Error(std::move(detail)), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

struct Product {
    std::string id;
    std::string title;
    std::set<std::string> attributes;
    // Option name -> selectable values, in display order.
    std::map<std::string, std::vector<std::string>> options;
    double price = 0.0;
};

struct TaskSpec {
    std::string id;
    std::string instruction;
    std::set<std::string> target_attributes;
    std::map<std::string, std::string> target_options;
    double price_cap = 0.0;
};

void to_json(nlohmann::json& j, const Product& p);
void from_json(const nlohmann::json& j, Product& p);
void to_json(nlohmann::json& j, const TaskSpec& t);
void from_json(const nlohmann::json& j, TaskSpec& t);

// Products keyed by unique id, kept in file order.
class Catalog {
public:
    Catalog() = default;
    // Throws ShopError(bad_data) on duplicate ids or invalid products.
    explicit Catalog(std::vector<Product> products);

    const std::vector<Product>& products() const noexcept { return products_; }
    const Product* find(const std::string& id) const;
    bool empty() const noexcept { return products_.empty(); }
    std::size_t size() const noexcept { return products_.size(); }

private:
    std::vector<Product> products_;
};

// Line-delimited JSON readers. Blank lines are skipped. Throw ShopError(bad_data).
Catalog load_catalog(const std::string& path);
std::vector<TaskSpec> load_tasks(const std::string& path);
Catalog parse_catalog(const nlohmann::json& products);
std::vector<TaskSpec> parse_tasks(const nlohmann::json& tasks);

// Throws ShopError(bad_data) for an invalid task spec.
void check_task(const TaskSpec& t);

}  // namespace evagent::shop
