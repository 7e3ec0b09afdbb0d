#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace connset {

// Maps stream items to output chunks on a bounded worker pool and emits the
// chunks in input order. The admission window keeps memory proportional to
// the worker count, not the stream length. Items are produced sequentially;
// identical inputs yield identical output bytes for any worker count.
template <class Task>
void for_each_ordered(int workers,
                      const std::function<std::optional<Task>()>& produce,
                      const std::function<std::string(Task&&, std::size_t)>& map_fn,
                      const std::function<void(const std::string&)>& sink) {
    if (workers <= 1) {
        std::size_t index = 0;
        while (auto task = produce()) sink(map_fn(std::move(*task), index++));
        return;
    }

    struct Shared {
        std::mutex mutex;
        std::condition_variable admit;
        std::condition_variable ready;
        std::size_t next_index = 0;
        std::size_t emit_base = 0;
        bool eof = false;
        bool aborted = false;
        std::size_t final_count = 0;
        std::map<std::size_t, std::variant<std::string, std::exception_ptr>> done;
    } sh;
    const std::size_t window = static_cast<std::size_t>(std::max(16, 4 * workers));

    auto worker = [&]() {
        while (true) {
            std::size_t index;
            std::optional<Task> task;
            {
                std::unique_lock lock(sh.mutex);
                sh.admit.wait(lock, [&] { return sh.eof || sh.aborted || sh.next_index < sh.emit_base + window; });
                if (sh.eof || sh.aborted) return;
                index = sh.next_index;
                std::optional<Task> produced;
                try {
                    produced = produce();
                } catch (...) {
                    sh.next_index = index + 1;
                    sh.eof = true;
                    sh.final_count = sh.next_index;
                    sh.done[index] = std::current_exception();
                    sh.admit.notify_all();
                    sh.ready.notify_all();
                    return;
                }
                if (!produced) {
                    sh.eof = true;
                    sh.final_count = sh.next_index;
                    sh.admit.notify_all();
                    sh.ready.notify_all();
                    return;
                }
                sh.next_index = index + 1;
                task = std::move(produced);
            }
            std::variant<std::string, std::exception_ptr> result;
            try {
                result = map_fn(std::move(*task), index);
            } catch (...) {
                result = std::current_exception();
            }
            {
                std::lock_guard lock(sh.mutex);
                sh.done[index] = std::move(result);
                sh.ready.notify_all();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);

    std::exception_ptr pending_error;
    {
        std::unique_lock lock(sh.mutex);
        while (true) {
            sh.ready.wait(lock, [&] { return sh.done.count(sh.emit_base) > 0 || (sh.eof && sh.emit_base >= sh.final_count); });
            if (sh.done.count(sh.emit_base) == 0) break;  // stream fully emitted
            auto node = sh.done.extract(sh.emit_base);
            ++sh.emit_base;
            sh.admit.notify_all();
            if (std::holds_alternative<std::exception_ptr>(node.mapped())) {
                pending_error = std::get<std::exception_ptr>(node.mapped());
                sh.aborted = true;
                sh.admit.notify_all();
                break;
            }
            lock.unlock();
            sink(std::get<std::string>(node.mapped()));
            lock.lock();
        }
    }
    for (auto& t : pool) t.join();
    if (pending_error) std::rethrow_exception(pending_error);
}

}  // namespace connset
