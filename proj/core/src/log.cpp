#include "eventlens/log.hpp"

namespace eventlens {

void Logger::write(std::string_view level, std::string_view msg) {
  *out_ << '[' << level << "] " << msg << '\n';
  out_->flush();
}

}  // namespace eventlens
