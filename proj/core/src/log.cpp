#include "twofa/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace twofa::log {
namespace {

std::atomic<Level> g_level{Level::Info};
std::mutex g_mutex;

void emit(Level level, const char* tag, const std::string& message) {
    if (level < g_level.load(std::memory_order_relaxed)) {
        return;
    }
    std::lock_guard<std::mutex> lock(g_mutex);
    std::cerr << '[' << tag << "] " << message << '\n';
}

}  // namespace

void set_level(Level level) {
    g_level.store(level, std::memory_order_relaxed);
}

Level level() {
    return g_level.load(std::memory_order_relaxed);
}

bool set_level(std::string_view name) {
    if (name == "debug") {
        set_level(Level::Debug);
    } else if (name == "info") {
        set_level(Level::Info);
    } else if (name == "warn") {
        set_level(Level::Warn);
    } else if (name == "error") {
        set_level(Level::Error);
    } else if (name == "off") {
        set_level(Level::Off);
    } else {
        return false;
    }
    return true;
}

void debug(const std::string& message) {
    emit(Level::Debug, "debug", message);
}

void info(const std::string& message) {
    emit(Level::Info, "info", message);
}

void warn(const std::string& message) {
    emit(Level::Warn, "warn", message);
}

void error(const std::string& message) {
    emit(Level::Error, "error", message);
}

}
