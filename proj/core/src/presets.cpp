// Named conjecture families. Variable letters follow each statement; the sum of
// squares is symmetric, so only domains and side conditions carry the roles.

#include <stdexcept>

#include "foursq/scanner.hpp"

namespace foursq {

const std::vector<NamedFamily>& named_families() {
  static const std::vector<NamedFamily> kFamilies{
      // Linear forms.
      {"one_three_five", "x+3y+5z ~ square [N]", 0, "", "x+3y+5z a square"},
      {"three_five_six", "3x+5y+6z ~ twice_square [N]", 16, "", "3x+5y+6z twice a square, n > 15"},
      {"one_three_five_cube", "x+3y+5z ~ cube [Z]", 0, "", "x+3y+5z a cube over Z"},
      {"x_plus_2y", "x+2y ~ square [N]", 0, "", "x+2y a square"},
      {"x_plus_3y", "x+3y ~ square [N]", 0, "", "x+3y a square"},
      {"x_plus_24y", "x+24y ~ square [N]", 0, "", "x+24y a square"},
      {"x_plus_7y", "x+7y ~ square [N]", 0, "", "x+7y a square; fails at 47"},
      {"three_x_minus_y", "3x-y ~ square [N]", 4, "", "3x-y a square, n > 3"},
      {"two_x_minus_y", "2x-y ~ square [N]", 0, "", "2x-y a square"},
      {"four_x_minus_3y", "4x-3y ~ square [N]", 0, "", "4x-3y a square"},
      {"six_x_minus_2y", "6x-2y ~ square [N]", 0, "", "6x-2y a square"},
      {"x_minus_y_cube", "x-y ~ cube [N]", 0, "2^(6k+3)*7", "x-y a cube off 2^(6k+3)*7"},
      {"x_minus_y_minus_z", "x-y-z ~ square [N]", 0, "", "x-y-z a square"},
      {"four_x_minus_y_minus_2z", "4x-y-2z ~ square [N]", 0, "", "4x-y-2z a square"},
      {"x_plus_2y_minus_3z", "x+2y-3z ~ square [N]", 0, "", "x+2y-3z a square"},
      {"x_plus_y_minus_z", "x+y-z ~ square [N]", 0, "", "x+y-z a square"},
      {"x_plus_18y_minus_z", "x+18y-z ~ square [N]", 0, "", "x+18y-z a square"},
      {"two_x_plus_y_minus_z_cube", "2x+y-z ~ nonneg_cube [N; y<=z]", 0, "",
       "2x+y-z a nonnegative cube with y <= z"},
      {"two_x_plus_y_minus_z_2cube", "2x+y-z ~ 2*nonneg_cube [N; y<=z]", 0, "",
       "2x+y-z twice a nonnegative cube with y <= z"},
      {"two_x_plus_y_minus_z_4cube", "2x+y-z ~ 4*nonneg_cube [N; y<=z]", 0, "",
       "2x+y-z four times a nonnegative cube with y <= z"},
      {"w_x_2y_minus_4z", "w+x+2y-4z ~ 2*nonneg_cube [x,y,z in N; w in Z]", 0, "",
       "w+x+2y-4z twice a nonnegative cube"},
      {"w_2x_3y_5z", "w+2x+3y+5z ~ square [N]", 0, "4^(2k+1)*7", "w+2x+3y+5z a square off 4^(2k+1)*7"},
      {"x_y_2z_minus_w", "x+y+2z-w ~ square [N]", 0, "", "x+y+2z-w a square"},
      {"x_2y_8z_minus_w", "x+2y+8z-w ~ square [N]", 0, "", "x+2y+8z-w a square"},
      {"w_x_y_minus_z_ordered", "w+x+y-z ~ square [w in Z; x,y,z in N; |w|<=x; y<=x; y<=z; z<x+y]", 1,
       "", "w+x+y-z a square with |w| <= x >= y <= z < x+y"},
      {"w_x_y_minus_z_cube", "w+x+y-z ~ nonneg_cube [Z; |x|<=y; z<=y; z>=0]", 0, "",
       "w+x+y-z a nonnegative cube with |x| <= y >= z >= 0"},
      {"w_x_y_3z_cube", "w+x+y+3z ~ nonneg_cube [x,y,z in Z; w in Z+]", 1, "",
       "w+x+y+3z a nonnegative cube"},
      {"x_2y_minus_z_minus_w", "x+2y-z-w ~ square [N]", 0, "", "x+2y-z-w a square"},
      {"nine_11_2_9", "9x+11y-2z-9w ~ square [N]", 0, "", "9x+11y-2z-9w a square"},
      // Products with a linear factor.
      {"x_plus_y_times_z", "(x+y)z ~ square [x,y,w in N; z in Z+]", 1, "", "(x+y)z a square, z > 0"},
      {"x_plus_2y_times_z", "(x+2y)z ~ square [x,y,w in N; z in Z+]", 1, "", "(x+2y)z a square, z > 0"},
      {"x_plus_3y_times_z", "(x+3y)z ~ square [x,y,w in N; z in Z+]", 1, "", "(x+3y)z a square, z > 0"},
      {"x_minus_2y_times_z", "(x-2y)z ~ square [x,y,w in N; z in Z+]", 1, "", "(x-2y)z a square, z > 0"},
      {"three_x_minus_2y_times_z", "(3x-2y)z ~ square [x,y,w in N; z in Z+]", 1, "",
       "(3x-2y)z a square, z > 0"},
      {"two_x_plus_5y_times_z", "(2x+5y)z ~ square [N]", 0, "", "(2x+5y)z a square"},
      {"w_x_2y_3z", "w(x+2y+3z) ~ square [N]", 0, "", "w(x+2y+3z) a square"},
      {"w_x_3y_6z", "w(x+3y+6z) ~ square [N]", 0, "", "w(x+3y+6z) a square"},
      {"w_25w_24", "w(25w+24(x+2y+4z)) ~ square [x,y,z in N; w in Z+]", 1, "",
       "w(25w+24(x+2y+4z)) a square"},
      // Quadratic and higher forms.
      {"wx_2xy_2yz", "wx+2xy+2yz ~ square [x,y,z in N; w in Z+]", 1, "", "wx+2xy+2yz a square"},
      {"two_wx_xy_4yz", "2wx+xy+4yz ~ square [x,y,z in N; w in Z+]", 1, "", "2wx+xy+4yz a square"},
      {"two_xy_yz_zw_wx", "2xy+yz-zw-wx ~ square [x,y,z in N; w in Z+; x<=y]", 1, "",
       "2xy+yz-zw-wx a square with x <= y"},
      {"w2_4xy_8yz_32zx", "w^2+4xy+8yz+32zx ~ square [x,y,z in N; w in Z+]", 1, "",
       "w^2+4xy+8yz+32zx a square"},
      {"w2_xy_yz", "w^2+xy+yz ~ square [x,y,z in N; w in Z+]", 1, "", "w^2+xy+yz a square"},
      {"xy_2yz_3zx", "xy+2yz+3zx ~ square [N]", 0, "", "xy+2yz+3zx a square"},
      {"wx_xy_2yz_3zx", "wx+xy+2yz+3zx ~ twice_square [x,y,z in N; w in Z+]", 1, "",
       "wx+xy+2yz+3zx twice a square"},
      {"six_wx_3t2", "6wx+2xy+3yz+4zx ~ 3*square [x,y,z in N; w in Z+]", 1, "",
       "6wx+2xy+3yz+4zx three times a square"},
      {"x2_8y2_16z2", "x^2+8y^2+16z^2 ~ square [N; x>=y]", 0, "", "x^2+8y^2+16z^2 a square with x >= y"},
      {"x2_3y2_12z2", "x^2+3y^2+12z^2 ~ square [N]", 0, "", "x^2+3y^2+12z^2 a square"},
      {"pyth_10w_5x", "(10w+5x)^2+(12y+36z)^2 ~ square [x,y,z in N; w in Z+]", 1, "",
       "(10w+5x)^2+(12y+36z)^2 a square"},
      {"pyth_x_y_4z", "(x+y)^2+16z^2 ~ square [N; y>z]", 1, "", "(x+y)^2+(4z)^2 a square with y > z"},
      {"legs_8x_12y_15z", "legs(8x+12y, 15z) [N; x+y>0; z>0]", 6, "",
       "8x+12y and 15z legs of a right triangle, n > 5"},
      {"pyth_x_y_z", "(x+y+z)^2+16(x+y-z)^2 ~ square [N; x+y>=z]", 0, "",
       "(x+y+z)^2+(4(x+y-z))^2 a square with x+y >= z"},
      {"legs_x_8y_8z_15w", "legs(x+8y+8z+15w, 6x+6y+6z+6w) [N; y<z]", 1, "",
       "x+8y+8z+15w and 6(x+y+z+w) legs with y < z"},
      {"x2_12yz", "x^2+12yz ~ square [N]", 0, "", "x^2+12yz a square"},
      {"nine_x2_minus_4yz", "9x^2-4yz ~ square [N]", 0, "", "9x^2-4yz a square"},
      {"w_x2_8y2_minus_z2", "w(x^2+8y^2-z^2) ~ square [N]", 0, "", "w(x^2+8y^2-z^2) a square"},
      {"three_x2_13y2_z", "(3x^2+13y^2)z ~ square [N]", 0, "", "(3x^2+13y^2)z a square"},
      {"cubic_36x2y", "36x^2y+12y^2z+z^2x ~ square [x,y,z in N; w in Z+]", 1, "",
       "36x^2y+12y^2z+z^2x a square"},
      {"x4_y3z", "x^4+y^3z ~ square [N]", 0, "", "x^4+y^3z a square"},
      {"x4_20y3z_60yz3", "x^4+20y^3z+60yz^3 ~ square [x,y,z in N; w in Z+]", 1, "",
       "x^4+20y^3z+60yz^3 a square"},
      {"four_x2_5y2_20zw", "4x^2+5y^2+20zw ~ square [N; z<w]", 1, "", "4x^2+5y^2+20zw a square with z < w"},
      {"x2_8y2_8zw", "x^2+8y^2+8zw ~ square [N]", 0, "", "x^2+8y^2+8zw a square"},
      {"x2_3y2_5z2_8w2", "x^2+3y^2+5z^2-8w^2 ~ square [N]", 0, "", "x^2+3y^2+5z^2-8w^2 a square"},
      {"w2x2_3x2y2_2y2z2", "w^2x^2+3x^2y^2+2y^2z^2 ~ square [N]", 0, "", "w^2x^2+3x^2y^2+2y^2z^2 a square"},
      {"w2x2_5x2y2_80y2z2", "w^2x^2+5x^2y^2+80y^2z^2+20z^2w^2 ~ square [x,y,z in N; w in Z+]", 1, "",
       "w^2x^2+5x^2y^2+80y^2z^2+20z^2w^2 a square"},
      {"three_x2_9y2_3z2_20w2", "3x^2+9y^2-3z^2-20w^2 ~ square [N]", 0, "",
       "3x^2+9y^2-3z^2-20w^2 a square"},
      {"xyz_x_9y_11z_10w", "xyz(x+9y+11z+10w) ~ square [N]", 0, "", "xyz(x+9y+11z+10w) a square"},
      {"xyz_x_3y_13z", "xyz(x+3y+13z) ~ square [x in Z+; y,z,w in N; y>=z]", 1, "",
       "xyz(x+3y+13z) a square with y >= z"},
      {"xy_3x_5y_2z_3w", "xy(3x+5y+2z+3w) ~ square [N; w>0]", 1, "", "xy(3x+5y+2z+3w) a square, w > 0"},
      {"xy_x2_8y2_20z2", "xy(x^2+8y^2+20z^2) ~ square [N]", 0, "", "xy(x^2+8y^2+20z^2) a square"},
      {"xy_pm_2zw", "xy+2zw ~ square | xy-2zw ~ square [N]", 0, "", "xy+2zw or xy-2zw a square"},
      {"xy_pm_half_zw", "xy+zw/2 ~ square | xy-zw/2 ~ square [N; max(x,y)>=min(z,w)]", 0, "",
       "xy+zw/2 or xy-zw/2 a square with max(x,y) >= min(z,w)"},
      {"three_x2y_z2w", "3x^2y+z^2w ~ square [x,y,z in N; w in Z; x>=z]", 0, "",
       "3x^2y+z^2w a square with x >= z"},
      {"seven_x2y_z2w", "7x^2y+z^2w ~ square [x,y,z in N; w in Z]", 0, "", "7x^2y+z^2w a square"},
      {"xy_yz_zw_fourth", "xy+yz+zw ~ power4 [x in Z+; y in N; z,w in Z]", 1, "",
       "xy+yz+zw a fourth power"},
      {"xy_yz_2zw_2wx_fifth", "xy+yz+2zw+2wx ~ power5 [x,y,z in Z; w in Z+]", 1, "",
       "xy+yz+2zw+2wx a fifth power"},
  };
  return kFamilies;
}

const NamedFamily& find_named_family(std::string_view name) {
  for (const auto& f : named_families()) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("unknown family: " + std::string(name));
}

}  // namespace foursq
