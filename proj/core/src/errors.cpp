#include "effprice/errors.hpp"

namespace effprice {

MonthListError::MonthListError(const std::string& prefix, std::vector<std::string> months)
    : Error([&] {
          std::string msg = prefix;
          for (std::size_t i = 0; i < months.size(); ++i) {
              msg += (i == 0 ? ": " : ", ") + months[i];
          }
          return msg;
      }()),
      months_(std::move(months)) {}

}  // namespace effprice
