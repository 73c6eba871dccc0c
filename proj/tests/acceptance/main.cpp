// Prints one PASS/FAIL line per primary criterion; exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include "criteria.hpp"

int main(int argc, char** argv) {
    const std::string data_dir = argc > 1 ? argv[1] : EVAGENT_DATA_DIR;
    const std::string scratch = argc > 2 ? argv[2] : (std::filesystem::temp_directory_path() / "evagent-acceptance").string();

    const auto criteria = acceptance::primary_criteria(data_dir, scratch);
    std::size_t failed = 0, index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto t0 = std::chrono::steady_clock::now();
        acceptance::Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = out.pass;
        std::string timing;
        char buf[64];
        if (c.time_limit_s > 0) {
            std::snprintf(buf, sizeof buf, "%.3f s, limit %.0f s", secs, c.time_limit_s);
            if (secs >= c.time_limit_s) pass = false;
        } else {
            std::snprintf(buf, sizeof buf, "%.3f s", secs);
        }
        timing = buf;
        if (!pass) ++failed;
        std::cout << (pass ? "PASS" : "FAIL") << " [" << index << "/" << criteria.size() << "] " << c.name << ": "
                  << out.detail << " (" << timing << ")" << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " primary criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
