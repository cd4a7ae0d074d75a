"""Beam Gauss-point energy kernel (generated by
tools/gen_beam_kernel.py; do not edit by hand)."""

import math

from .jit import njit


@njit
def beam_gp(q, T, A2, A3, consts, g, H):
    """Energy density at one quadrature point plus exact
    gradient g (8,) and Hessian H (8, 8) in
    q = (a1, a1_1, phi, phi_1). consts packs
    (Aref, K1, K2, K3, cN, cT, c2, c3, J)."""
    q0 = q[0]
    q3 = q[3]
    T0 = T[0]
    B0 = A2[0]
    C0 = A3[0]
    q1 = q[1]
    q4 = q[4]
    T1 = T[1]
    B1 = A2[1]
    C1 = A3[1]
    q2 = q[2]
    q5 = q[5]
    T2 = T[2]
    B2 = A2[2]
    C2 = A3[2]
    q6 = q[6]
    q7 = q[7]
    Aref = consts[0]
    K1 = consts[1]
    K2 = consts[2]
    K3 = consts[3]
    cN = consts[4]
    cT = consts[5]
    c2 = consts[6]
    c3 = consts[7]
    J = consts[8]
    x0 = q0**2
    x1 = q1**2
    x2 = q2**2
    x3 = x0 + x1 + x2
    x4 = -Aref + x3
    x5 = x4**2
    x6 = 1/x3
    x7 = cN*x6
    x8 = math.cos(q6)
    x9 = B0*q0
    x10 = B1*q1
    x11 = B2*q2
    x12 = x10 + x11
    x13 = x12 + x9
    x14 = 1/math.sqrt(x3)
    x15 = q0*x14
    x16 = q1*x14
    x17 = q2*x14
    x18 = T0*x15 + T1*x16 + T2*x17 + 1
    x19 = 1/x18
    x20 = T0 + x15
    x21 = x14*x20
    x22 = x19*x21
    x23 = B0 - x13*x22
    x24 = math.sin(q6)
    x25 = C0*q0
    x26 = C1*q1
    x27 = C2*q2
    x28 = x25 + x26 + x27
    x29 = C0 - x22*x28
    x30 = x23*x8 + x24*x29
    x31 = T1 + x16
    x32 = x14*x31
    x33 = x19*x32
    x34 = B1 - x13*x33
    x35 = C1 - x28*x33
    x36 = x24*x35 + x34*x8
    x37 = T2 + x17
    x38 = x14*x37
    x39 = x19*x38
    x40 = B2 - x13*x39
    x41 = C2 - x28*x39
    x42 = x24*x41 + x40*x8
    x43 = q3*x30 + q4*x36 + q5*x42
    x44 = x43*x6
    x45 = K3 - x44
    x46 = c3*x45**2
    x47 = x23*x24 - x29*x8
    x48 = x24*x34 - x35*x8
    x49 = x24*x40 - x41*x8
    x50 = -q3*x47 - q4*x48 - q5*x49
    x51 = x50*x6
    x52 = K2 + x51
    x53 = c2*x52**2
    x54 = -q3
    x55 = q0*q3
    x56 = q1*q4
    x57 = q2*q5
    x58 = x55 + x56 + x57
    x59 = x58*x6
    x60 = q0*x59
    x61 = x54 + x60
    x62 = x13*x6
    x63 = -q4
    x64 = q1*x59
    x65 = x63 + x64
    x66 = -q5
    x67 = q2*x59
    x68 = x66 + x67
    x69 = B0*x61 + B1*x65 + B2*x68
    x70 = T0*x61 + T1*x65 + T2*x68
    x71 = x19*x62
    x72 = x14*x69 - x70*x71
    x73 = x19*(x20*x72 + x61*x62)
    x74 = x19*(x31*x72 + x62*x65)
    x75 = x19*(x37*x72 + x62*x68)
    x76 = -K1 + q7 + x29*x73 + x35*x74 + x41*x75
    x77 = cT*x76**2
    x78 = (1/2)*J
    x79 = x4*x7
    x80 = x3**(-2)
    x81 = cN*x80
    x82 = (1/2)*x5*x81
    x83 = 2*x46
    x84 = 2*x53
    x85 = x3**(-3/2)
    x86 = x77*x85
    x87 = 2*x44
    x88 = q0*x87
    x89 = -q0*q1*x13*x80
    x90 = x0*x6
    x91 = B0*x90
    x92 = q0*x6
    x93 = x10*x92 + x11*x92
    x94 = -B0 + x91 + x93
    x95 = -x94
    x96 = T0*x90
    x97 = T1*q1
    x98 = T2*q2
    x99 = x92*x97 + x92*x98
    x100 = -T0 + x96 + x99
    x101 = x100*x31
    x102 = x101*x71 + x32*x95 + x89
    x103 = -q0*q1*x28*x80
    x104 = -C0*x90 + C0 - x26*x92 - x27*x92
    x105 = x28*x6
    x106 = x105*x19
    x107 = x101*x106 + x103 + x104*x32
    x108 = x102*x8 + x107*x24
    x109 = -q0*q2*x13*x80
    x110 = x100*x37
    x111 = x109 + x110*x71 + x38*x95
    x112 = -q0*q2*x28*x80
    x113 = x104*x38 + x106*x110 + x112
    x114 = x111*x8 + x113*x24
    x115 = x90 - 1
    x116 = -x115
    x117 = x100*x20
    x118 = x116*x62 + x117*x71 + x21*x95
    x119 = x104*x21 + x105*x116 + x106*x117
    x120 = x118*x8 + x119*x24
    x121 = q3*x120
    x122 = x19*(q4*x108 + q5*x114 + x121)
    x123 = x122 + x88
    x124 = c3*x45
    x125 = 2*x124
    x126 = 2*x51
    x127 = -x102
    x128 = -x107
    x129 = x127*x24 - x128*x8
    x130 = -x111
    x131 = -x113
    x132 = x130*x24 - x131*x8
    x133 = x118*x24 - x119*x8
    x134 = q3*x133 - q4*x129 - q5*x132
    x135 = -q0*x126 + x134*x19
    x136 = c2*x52
    x137 = 2*x136
    x138 = -x65
    x139 = x13*x80
    x140 = x138*x139
    x141 = x6*x95
    x142 = q3*x90 + x56*x92 + x57*x92
    x143 = x142 + x61
    x144 = q1*x139
    x145 = x100*x85
    x146 = x13*x19
    x147 = x138*x146
    x148 = -x61
    x149 = B0*x148
    x150 = B1*x138
    x151 = -x68
    x152 = B2*x151
    x153 = x149 + x150 + x152
    x154 = T0*x148
    x155 = T1*x138
    x156 = T2*x151
    x157 = x154 + x155 + x156
    x158 = -x14*x153 + x157*x71
    x159 = x158*x85
    x160 = q1*x159
    x161 = q0*x160
    x162 = x19*x6
    x163 = x100*x153
    x164 = x157*x19
    x165 = x13*x157
    x166 = x18**(-2)
    x167 = 2*x166
    x168 = x145*x167
    x169 = -x142 - x54
    x170 = q0*x169
    x171 = -x0*x58*x6 + x170 + x58
    x172 = -x171
    x173 = -B0*x172 - B1*q1*x143 - B2*q2*x143 + q0*x150 + q0*x152 + x148*x9
    x174 = -x173
    x175 = -T0*x172 - T1*q1*x143 - T2*q2*x143 + q0*x154 + q0*x155 + q0*x156
    x176 = -x175
    x177 = x139*x19
    x178 = x141*x164 - x162*x163 + x165*x168 - x174*x85 + x176*x177
    x179 = -q0*x140 + x138*x141 + x143*x144 + x145*x147 + x161 - x178*x31
    x180 = x139*x151
    x181 = q2*x139
    x182 = x145*x146
    x183 = q2*x159
    x184 = q0*x183
    x185 = -q0*x180 + x141*x151 + x143*x181 + x151*x182 - x178*x37 + x184
    x186 = q0*x139
    x187 = x6*x94
    x188 = x14*x72
    x189 = x162*x69
    x190 = x19*x70
    x191 = x13*x70
    x192 = x100*x13*x19*x61*x85 - x115*x188 + x13*x171*x80 - x186*x61 - x187*x61 + x20*(x100*x189 - x168*x191 + x173*x85 - x175*x177 + x187*x190)
    x193 = x107*x74 + x113*x75 + x119*x73 + x179*x35 + x185*x41 - x192*x29
    x194 = cT*x14
    x195 = x19*x76
    x196 = x194*x195
    x197 = 2*x196
    x198 = q1*x87
    x199 = x1*x6
    x200 = B1*x199
    x201 = q1*x6
    x202 = x11*x201 + x201*x9
    x203 = -B1 + x200 + x202
    x204 = -x203
    x205 = T1*x199
    x206 = T0*q1
    x207 = x206*x92
    x208 = x201*x98 + x207
    x209 = -T1 + x205 + x208
    x210 = x20*x209
    x211 = x204*x21 + x210*x71 + x89
    x212 = -C1*x199 + C1 - x201*x25 - x201*x27
    x213 = x103 + x106*x210 + x21*x212
    x214 = x211*x8 + x213*x24
    x215 = -q1*q2*x13*x80
    x216 = x209*x37
    x217 = x204*x38 + x215 + x216*x71
    x218 = -q1*q2*x28*x80
    x219 = x106*x216 + x212*x38 + x218
    x220 = x217*x8 + x219*x24
    x221 = x199 - 1
    x222 = -x221
    x223 = x209*x31
    x224 = x204*x32 + x222*x62 + x223*x71
    x225 = x105*x222 + x106*x223 + x212*x32
    x226 = x224*x8 + x225*x24
    x227 = q4*x226
    x228 = x19*(q3*x214 + q5*x220 + x227)
    x229 = x198 + x228
    x230 = -x211
    x231 = -x213
    x232 = x230*x24 - x231*x8
    x233 = -x217
    x234 = -x219
    x235 = x233*x24 - x234*x8
    x236 = x224*x24 - x225*x8
    x237 = -q3*x232 + q4*x236 - q5*x235
    x238 = -q1*x126 + x19*x237
    x239 = x204*x6
    x240 = q4*x199 + x201*x55 + x201*x57
    x241 = x240 + x65
    x242 = x146*x85
    x243 = x209*x242
    x244 = x153*x162
    x245 = x167*x85
    x246 = x209*x245
    x247 = x241*x9
    x248 = x11*x241
    x249 = -x240 - x63
    x250 = q1*x249
    x251 = -x1*x58*x6 + x250 + x58
    x252 = -x251
    x253 = B1*x252
    x254 = -q1*x149 - q1*x152 - x10*x138 + x247 + x248 + x253
    x255 = T0*q0
    x256 = x241*x255
    x257 = x241*x98
    x258 = T1*x252
    x259 = -q1*x154 - q1*x155 - q1*x156 + x256 + x257 + x258
    x260 = x164*x239 + x165*x246 + x177*x259 - x209*x244 - x254*x85
    x261 = -x144*x148 + x148*x239 + x148*x243 + x161 + x186*x241 - x20*x260
    x262 = q2*x160
    x263 = -x144*x151 + x151*x239 + x151*x243 + x181*x241 - x260*x37 + x262
    x264 = x203*x6
    x265 = x13*x19*x209*x65*x85 + x13*x251*x80 - x144*x65 - x188*x221 - x264*x65 + x31*(x177*x259 + x189*x209 + x190*x264 - x191*x246 - x254*x85)
    x266 = x213*x73 + x219*x75 + x225*x74 + x261*x29 + x263*x41 - x265*x35
    x267 = q2*x87
    x268 = x2*x6
    x269 = B2*x268
    x270 = q2*x6
    x271 = x10*x270 + x270*x9
    x272 = -B2 + x269 + x271
    x273 = -x272
    x274 = T2*x268
    x275 = x255*x270 + x270*x97
    x276 = -T2 + x274 + x275
    x277 = x20*x276
    x278 = x109 + x21*x273 + x277*x71
    x279 = -C2*x268 + C2 - x25*x270 - x26*x270
    x280 = x106*x277 + x112 + x21*x279
    x281 = x24*x280 + x278*x8
    x282 = x276*x31
    x283 = x215 + x273*x32 + x282*x71
    x284 = x106*x282 + x218 + x279*x32
    x285 = x24*x284 + x283*x8
    x286 = x268 - 1
    x287 = -x286
    x288 = x276*x37
    x289 = x273*x38 + x287*x62 + x288*x71
    x290 = x105*x287 + x106*x288 + x279*x38
    x291 = x24*x290 + x289*x8
    x292 = q5*x291
    x293 = x19*(q3*x281 + q4*x285 + x292)
    x294 = x267 + x293
    x295 = -x278
    x296 = -x280
    x297 = x24*x295 - x296*x8
    x298 = -x283
    x299 = -x284
    x300 = x24*x298 - x299*x8
    x301 = x24*x289 - x290*x8
    x302 = -q3*x297 - q4*x300 + q5*x301
    x303 = -q2*x126 + x19*x302
    x304 = x273*x6
    x305 = q5*x268 + x270*x55 + x270*x56
    x306 = x305 + x68
    x307 = x242*x276
    x308 = x276*x85
    x309 = x167*x308
    x310 = x306*x9
    x311 = x10*x306
    x312 = -x305 - x66
    x313 = q2*x312
    x314 = -x2*x58*x6 + x313 + x58
    x315 = -x314
    x316 = B2*x315
    x317 = -q2*x149 - q2*x150 - x11*x151 + x310 + x311 + x316
    x318 = x255*x306
    x319 = x306*x97
    x320 = T2*x315
    x321 = -q2*x154 - q2*x155 - q2*x156 + x318 + x319 + x320
    x322 = x164*x304 + x165*x309 + x177*x321 - x244*x276 - x317*x85
    x323 = -x148*x181 + x148*x304 + x148*x307 + x184 + x186*x306 - x20*x322
    x324 = -x138*x181 + x138*x304 + x144*x306 + x147*x308 + x262 - x31*x322
    x325 = x272*x6
    x326 = x13*x19*x276*x68*x85 + x13*x314*x80 - x181*x68 - x188*x286 - x325*x68 + x37*(x177*x321 + x189*x276 + x190*x325 - x191*x309 - x317*x85)
    x327 = x280*x73 + x284*x74 + x29*x323 + x290*x75 + x324*x35 - x326*x41
    x328 = q0*x144
    x329 = B0*x116
    x330 = -x329 + x93
    x331 = T0*x116
    x332 = -x331 + x99
    x333 = -x14*x330 + x332*x71
    x334 = -x333
    x335 = x31*x334 + x328
    x336 = q0*x181
    x337 = x334*x37 + x336
    x338 = x115*x62 + x20*x334
    x339 = x29*x338 + x335*x35 + x337*x41
    x340 = B1*x222
    x341 = x202 - x340
    x342 = T1*x222
    x343 = x208 - x342
    x344 = -x14*x341 + x343*x71
    x345 = -x344
    x346 = x20*x345 + x328
    x347 = q2*x144
    x348 = x345*x37 + x347
    x349 = x221*x62 + x31*x345
    x350 = x29*x346 + x348*x41 + x349*x35
    x351 = B2*x287
    x352 = x271 - x351
    x353 = T2*x287
    x354 = x275 - x353
    x355 = -x14*x352 + x354*x71
    x356 = -x355
    x357 = x20*x356 + x336
    x358 = x31*x356 + x347
    x359 = x286*x62 + x356*x37
    x360 = x29*x357 + x35*x358 + x359*x41
    x361 = q3*x47 + q4*x48 + q5*x49
    x362 = J*x194
    x363 = -x87
    x364 = 8*x80
    x365 = x0*x364
    x366 = 4*x92
    x367 = 3*x9
    x368 = -x10
    x369 = -x11
    x370 = 3*q0**3
    x371 = x370*x6
    x372 = 3*x10
    x373 = x372*x90
    x374 = 3*x11
    x375 = x374*x90
    x376 = B0*x371 - x367 + x368 + x369 + x373 + x375
    x377 = x31*x85
    x378 = x80*x95
    x379 = q0*q1
    x380 = x378*x379
    x381 = -x97
    x382 = -x98
    x383 = 3*x97
    x384 = x383*x90
    x385 = 3*x98
    x386 = x385*x90
    x387 = 3*T0*q0 - T0*x371 - x381 - x382 - x384 - x386
    x388 = x31*x387
    x389 = 2*x141
    x390 = x101*x19
    x391 = x100**2
    x392 = x167*x391
    x393 = x377*x392
    x394 = x3**(-5/2)
    x395 = x146*x394
    x396 = x100*x395
    x397 = x379*x396
    x398 = -x144
    x399 = x3**(-3)
    x400 = x13*x399
    x401 = x0*x400
    x402 = 3*q1
    x403 = x398 + x401*x402
    x404 = x13*x393 + x177*x388 + x376*x377 - 2*x380 + x389*x390 - 2*x397 + x403
    x405 = 3*x25
    x406 = -x26
    x407 = -x27
    x408 = 3*x26
    x409 = 3*x27
    x410 = C0*x371 - x405 + x406 + x407 + x408*x90 + x409*x90
    x411 = 2*x104
    x412 = x379*x80
    x413 = x28*x80
    x414 = x19*x413
    x415 = x104*x6
    x416 = 2*x415
    x417 = x100*x394
    x418 = x19*x28
    x419 = x379*x418
    x420 = x417*x419
    x421 = q1*x413
    x422 = -x421
    x423 = x0*x399
    x424 = x28*x423
    x425 = x402*x424 + x422
    x426 = x28*x393 + x377*x410 + x388*x414 + x390*x416 - x411*x412 - 2*x420 + x425
    x427 = x37*x85
    x428 = q0*q2
    x429 = x378*x428
    x430 = x37*x387
    x431 = x110*x19
    x432 = x392*x427
    x433 = x396*x428
    x434 = -x181
    x435 = 3*q2
    x436 = x401*x435 + x434
    x437 = x13*x432 + x177*x430 + x376*x427 + x389*x431 - 2*x429 - 2*x433 + x436
    x438 = x428*x80
    x439 = x418*x428
    x440 = x417*x439
    x441 = q2*x413
    x442 = -x441
    x443 = x424*x435 + x442
    x444 = x28*x432 + x410*x427 - x411*x438 + x414*x430 + x416*x431 - 2*x440 + x443
    x445 = 3*x115
    x446 = x186*x445
    x447 = x20*x85
    x448 = x392*x447
    x449 = x20*x387
    x450 = x117*x19
    x451 = 2*x116*x182 + x116*x389 + x13*x448 + x177*x449 + x376*x447 + x389*x450 + x446
    x452 = q0*x413
    x453 = x116*x6
    x454 = x116*x418
    x455 = 2*x145*x454 + x28*x448 + x410*x447 + x411*x453 + x414*x449 + x416*x450 + x445*x452
    x456 = c2*x6
    x457 = 2*x456
    x458 = -x126
    x459 = x134*x19
    x460 = c3*x6
    x461 = 2*x460
    x462 = 2*x90
    x463 = 4*x4*x81
    x464 = 2*cN*x5
    x465 = x166*x194
    x466 = 2*x465
    x467 = x0*x394
    x468 = 3*x77
    x469 = x107*x19
    x470 = x113*x19
    x471 = x19*x192
    x472 = x139*x148
    x473 = -x472
    x474 = 3*x401
    x475 = q0*x378
    x476 = 2*x475
    x477 = x376*x80
    x478 = x172*x400
    x479 = 2*q0
    x480 = q0*x148
    x481 = x172*x80
    x482 = 2*x95
    x483 = x387*x394
    x484 = x146*x483
    x485 = x148*x19
    x486 = x145*x482
    x487 = x172*x395
    x488 = 2*q3
    x489 = 2*x56
    x490 = 2*x57
    x491 = 3*x60
    x492 = x58*x80
    x493 = -x56
    x494 = -x57
    x495 = 3*x55
    x496 = 3*x56
    x497 = 3*x57
    x498 = q3*x371 + x496*x90 + x497*x90
    x499 = x169*x462 - x370*x492 + x488*x90 - x488 + x489*x92 + x490*x92 + x491 - x92*(x493 + x494 - x495 + x498)
    x500 = q0*x159
    x501 = x116*x14
    x502 = 2*x178
    x503 = x153*x245
    x504 = 6*x139*x157/x18**3
    x505 = x19*x80
    x506 = x153*x505
    x507 = x165*x167
    x508 = 4*x166
    x509 = x145*x157
    x510 = x100*x505
    x511 = x19*x378
    x512 = x13*x417
    x513 = 3*x90
    x514 = x10*x143
    x515 = 2*x92
    x516 = x11*x143
    x517 = 2*x6
    x518 = -2*q1*q4
    x519 = -2*q2*q5
    x520 = 4*q0*q3 + 2*q0*x169 - x498 - x518 - x519 - 3*x58*x90
    x521 = x520*x6
    x522 = x143*x97
    x523 = x143*x98
    x524 = T0*x172
    x525 = x164*x477 - 2*x174*x510 + x176*x508*x512 + 2*x176*x511 + x177*(T0*x499 + x154*x513 - x154 + x155*x513 - x155 + x156*x513 - x156 - x515*x522 - x515*x523 - x515*x524 + x521*x97 + x521*x98) - x387*x506 - x391*x503 + x391*x504 + x483*x507 + x508*x509*x95 - x85*(B0*x499 + x10*x521 + x11*x521 + x149*x513 - x149 + x150*x513 - x150 + x152*x513 - x152 - x172*x517*x9 - x514*x515 - x515*x516)
    x526 = x400*x520
    x527 = x158*x467
    x528 = -x402*x527
    x529 = x379*x85
    x530 = q1*x378
    x531 = 2*x143
    x532 = x143*x400
    x533 = 2*x532
    x534 = x138*x19
    x535 = x147*x394
    x536 = x100*x535
    x537 = q1*x396
    x538 = -x140
    x539 = x160 + x538
    x540 = -x435*x527
    x541 = x428*x85
    x542 = q2*x378
    x543 = x151*x19
    x544 = q2*x396
    x545 = -x180
    x546 = x183 + x545
    x547 = 8*x92
    x548 = x135*x136
    x549 = x123*x124
    x550 = cT*x195*x85
    x551 = x193*x550
    x552 = x79 - x82 + x83 + x84 - x86
    x553 = 2*x7
    x554 = x399*x464
    x555 = x394*x468
    x556 = x124*x229
    x557 = 4*x201
    x558 = x136*x238
    x559 = x123*x461
    x560 = x135*x457
    x561 = x266*x550
    x562 = 2*x551
    x563 = x364*x379
    x564 = 2*x201
    x565 = B1*q0
    x566 = 3*x199
    x567 = q1*x92
    x568 = x374*x567
    x569 = x565*x566 - x565 + x568
    x570 = B0*q1
    x571 = x513*x570 - x570
    x572 = x569 + x571
    x573 = x19*x216
    x574 = x19*x239
    x575 = T1*q0
    x576 = x385*x567
    x577 = x566*x575 - x575 + x576
    x578 = x206*x513 - x206
    x579 = -x577 - x578
    x580 = x37*x579
    x581 = x13*x167
    x582 = x100*x209
    x583 = x427*x582
    x584 = q2*x400
    x585 = 3*x379*x584
    x586 = q1*q2
    x587 = -x396*x586
    x588 = -x378*x586 + x585 + x587
    x589 = x209*x395
    x590 = -x428*x589
    x591 = x204*x80
    x592 = -x428*x591 + x590
    x593 = x110*x574 + x141*x573 + x177*x580 + x427*x572 + x581*x583 + x588 + x592
    x594 = C0*q1
    x595 = C1*q0
    x596 = x409*x567 + x513*x594 + x566*x595 - x594 - x595
    x597 = x100*x162
    x598 = x212*x597
    x599 = x167*x28
    x600 = x586*x80
    x601 = x28*x399
    x602 = x379*x435
    x603 = x601*x602
    x604 = x418*x586
    x605 = -x104*x600 - x417*x604 + x603
    x606 = x209*x394
    x607 = -x212*x438 - x439*x606
    x608 = x37*x598 + x414*x580 + x415*x573 + x427*x596 + x583*x599 + x605 + x607
    x609 = x379*x589
    x610 = -x609
    x611 = x566 - 1
    x612 = x379*x591
    x613 = x19*x223
    x614 = x31*x579
    x615 = x377*x582
    x616 = x141*x222 + x182*x222
    x617 = x101*x574 + x141*x613 + x177*x614 + x186*x611 + x377*x572 + x581*x615 + x610 - x612 + x616
    x618 = x212*x412
    x619 = x419*x606
    x620 = x145*x418
    x621 = x222*x415 + x222*x620 + x31*x598 + x377*x596 + x414*x614 + x415*x613 + x452*x611 + x599*x615 - x618 - x619
    x622 = x19*x210
    x623 = x20*x579
    x624 = x447*x582
    x625 = -x397 + x403
    x626 = x116*x239 + x116*x243
    x627 = x117*x574 + x141*x622 + x177*x623 - x380 + x447*x572 + x581*x624 + x625 + x626
    x628 = x209*x85
    x629 = -x104*x412 + x20*x598 + x212*x453 + x414*x623 + x415*x622 - x420 + x425 + x447*x596 + x454*x628 + x599*x624
    x630 = x19*x237
    x631 = x193*x466
    x632 = x185*x19
    x633 = x119*x19
    x634 = x179*x19
    x635 = x572*x80
    x636 = x394*x507
    x637 = x157*x628
    x638 = x166*x482
    x639 = 2*x204
    x640 = x166*x639
    x641 = x19*x591
    x642 = x174*x505
    x643 = x167*x512
    x644 = x176*x581
    x645 = B0*x172
    x646 = q0*q4
    x647 = q1*q3
    x648 = x497*x567 + x513*x647 + x566*x646 - x646 - x647
    x649 = q0*x249 + q1*x169 - q1*x491 - x648
    x650 = x0*x492
    x651 = x170*x201 + x241 + x249*x90 - x402*x650 - x648*x92
    x652 = 3*x1
    x653 = q0*x652
    x654 = x143 + x169*x199 - x201*x648 + x250*x92 - x492*x653
    x655 = -x163*x246 + x164*x635 + x176*x641 + x177*(3*T0*q0*q1*x148*x6 + T0*x651 + 3*T1*q0*q1*x138*x6 + T1*x654 + 3*T2*q0*q1*x151*x6 + T2*q2*x6*x649 - x143*x205 - x201*x523 - x201*x524 - x241*x96 - x257*x92 - x258*x92) - x209*x642 - x254*x510 + x259*x511 + x259*x643 + x504*x582 - x506*x579 + x509*x640 + x579*x636 + x606*x644 + x637*x638 - x85*(3*B0*q0*q1*x148*x6 + B0*x651 + 3*B1*q0*q1*x138*x6 + B1*x654 + 3*B2*q0*q1*x151*x6 + B2*q2*x6*x649 - x143*x200 - x201*x516 - x201*x645 - x241*x91 - x248*x92 - x253*x92)
    x656 = x241*x378
    x657 = x143*x591
    x658 = q0*x591
    x659 = x395*x579
    x660 = x628*x95
    x661 = x145*x204
    x662 = x379*x400
    x663 = 3*x662
    x664 = x241*x396
    x665 = x143*x589
    x666 = q0*x151
    x667 = x167*x582
    x668 = x586*x85
    x669 = x158*x394
    x670 = -x602*x669
    x671 = x178*x668 - x532*x586 + x670
    x672 = x241*x400
    x673 = x260*x541 - x428*x672
    x674 = q0*x400
    x675 = q0*x535
    x676 = x260*x529
    x677 = x14*x178
    x678 = x1*x364
    x679 = 3*q1**3
    x680 = x6*x679
    x681 = -x9
    x682 = x11*x566 + x199*x367 + x369 + x681
    x683 = B1*x680 - x372 + x682
    x684 = -x255
    x685 = 3*x255
    x686 = x199*x685 + x382 + x566*x98 + x684
    x687 = 3*T1*q1 - T1*x680 - x686
    x688 = x20*x687
    x689 = 2*x239
    x690 = x209**2
    x691 = x447*x690
    x692 = -x186
    x693 = x652*x674 + x692
    x694 = x177*x688 + x447*x683 + x581*x691 - 2*x609 - 2*x612 + x622*x689 + x693
    x695 = -x452
    x696 = -x25
    x697 = C1*x680 + x199*x405 + x27*x566 + x407 - x408 + x696
    x698 = 2*x212
    x699 = x162*x209
    x700 = x698*x699
    x701 = x20*x700 + x414*x688 + x447*x697 + x599*x691 + x601*x653 - 2*x618 - 2*x619 + x695
    x702 = x586*x591
    x703 = x37*x687
    x704 = x427*x690
    x705 = x586*x589
    x706 = x434 + x584*x652
    x707 = x177*x703 + x427*x683 + x573*x689 + x581*x704 - 2*x702 - 2*x705 + x706
    x708 = x604*x606
    x709 = x1*x435
    x710 = x442 + x601*x709
    x711 = x37*x700 + x414*x703 + x427*x697 + x599*x704 - x600*x698 - 2*x708 + x710
    x712 = 3*x221
    x713 = x144*x712
    x714 = x377*x690
    x715 = x31*x687
    x716 = x177*x715 + 2*x222*x243 + x222*x689 + x377*x683 + x581*x714 + x613*x689 + x713
    x717 = x222*x6
    x718 = x222*x418
    x719 = x31*x700 + x377*x697 + x414*x715 + x421*x712 + x599*x714 + 2*x628*x718 + x698*x717
    x720 = 2*x199
    x721 = x19*x213
    x722 = x19*x219
    x723 = x19*x225
    x724 = x1*x400
    x725 = 3*x724
    x726 = q1*x591
    x727 = 2*x726
    x728 = x683*x80
    x729 = q1*x400
    x730 = 2*x729
    x731 = 2*x209
    x732 = q1*x535
    x733 = x167*x690
    x734 = x252*x80
    x735 = x628*x639
    x736 = x252*x395
    x737 = 2*q4
    x738 = 2*x55
    x739 = 3*x64
    x740 = -x55
    x741 = q4*x680 + x199*x495 + x566*x57
    x742 = x199*x737 + x201*x490 + x201*x738 - x201*(x494 - x496 + x740 + x741) + x249*x720 - x492*x679 - x737 + x739
    x743 = x14*x222
    x744 = 2*x260
    x745 = x209*x505
    x746 = x13*x508
    x747 = -2*q0*q3
    x748 = 4*q1*q4 + 2*q1*x249 - 3*x199*x58 - x519 - x741 - x747
    x749 = 2*x241
    x750 = x164*x728 + x177*(T0*q0*x6*x748 + 3*T0*x1*x148*x6 + 3*T1*x1*x138*x6 + T1*x742 + T2*q2*x6*x748 + 3*T2*x1*x151*x6 - x157 - x207*x749 - x257*x564 - x258*x564) + x204*x508*x637 - 2*x254*x745 + x259*x606*x746 + 2*x259*x641 - x503*x690 + x504*x690 - x506*x687 + x636*x687 - x85*(B0*q0*x6*x748 + 3*B0*x1*x148*x6 + 3*B1*x1*x138*x6 + B1*x742 + B2*q2*x6*x748 + 3*B2*x1*x151*x6 - x10*x252*x517 - x153 - x247*x564 - x248*x564)
    x751 = x395*x687
    x752 = 2*x672
    x753 = q1*x589
    x754 = 2*x753
    x755 = x473 + x500
    x756 = -x669*x709
    x757 = q2*x591
    x758 = q2*x589
    x759 = 8*x201
    x760 = x124*x294
    x761 = 4*x270
    x762 = x136*x303
    x763 = x327*x550
    x764 = x364*x428
    x765 = 2*x270
    x766 = B2*q0
    x767 = 3*x268
    x768 = q2*x92
    x769 = x372*x768
    x770 = x766*x767 - x766 + x769
    x771 = B0*q2
    x772 = x513*x771 - x771
    x773 = x770 + x772
    x774 = x19*x282
    x775 = x19*x304
    x776 = T2*q0
    x777 = x383*x768
    x778 = x767*x776 - x776 + x777
    x779 = T0*q2
    x780 = x513*x779 - x779
    x781 = -x778 - x780
    x782 = x31*x781
    x783 = x100*x276
    x784 = x377*x783
    x785 = x276*x395
    x786 = -x379*x785
    x787 = -x273*x412 + x786
    x788 = x101*x775 + x141*x774 + x177*x782 + x377*x773 + x581*x784 + x588 + x787
    x789 = C0*q2
    x790 = C2*q0
    x791 = x408*x768 + x513*x789 + x767*x790 - x789 - x790
    x792 = x279*x597
    x793 = x276*x394
    x794 = -x279*x412 - x419*x793
    x795 = x31*x792 + x377*x791 + x414*x782 + x415*x774 + x599*x784 + x605 + x794
    x796 = x428*x785
    x797 = -x796
    x798 = x767 - 1
    x799 = x273*x438
    x800 = x19*x288
    x801 = x37*x781
    x802 = x427*x783
    x803 = x141*x287 + x182*x287
    x804 = x110*x775 + x141*x800 + x177*x801 + x186*x798 + x427*x773 + x581*x802 + x797 - x799 + x803
    x805 = x279*x438
    x806 = x439*x793
    x807 = x287*x415 + x287*x620 + x37*x792 + x414*x801 + x415*x800 + x427*x791 + x452*x798 + x599*x802 - x805 - x806
    x808 = x19*x277
    x809 = x20*x781
    x810 = x447*x783
    x811 = -x433 + x436
    x812 = x116*x304 + x116*x307
    x813 = x117*x775 + x141*x808 + x177*x809 - x429 + x447*x773 + x581*x810 + x811 + x812
    x814 = -x104*x438 + x20*x792 + x279*x453 + x308*x454 + x414*x809 + x415*x808 - x440 + x443 + x447*x791 + x599*x810
    x815 = x19*x302
    x816 = x773*x80
    x817 = x157*x308
    x818 = x145*x273
    x819 = x273*x505
    x820 = q0*q5
    x821 = q2*q3
    x822 = x496*x768 + x513*x821 + x767*x820 - x820 - x821
    x823 = q0*x312 + q2*x169 - q2*x491 - x822
    x824 = x170*x270 + x306 + x312*x90 - x435*x650 - x822*x92
    x825 = x2*x492
    x826 = 3*q0
    x827 = x143 + x169*x268 - x270*x822 + x313*x92 - x825*x826
    x828 = x157*x167*x818 - x163*x309 + x164*x816 + x176*x819 + x177*(3*T0*q0*q2*x148*x6 + T0*x824 + 3*T1*q0*q2*x138*x6 + T1*q1*x6*x823 + 3*T2*q0*q2*x151*x6 + T2*x827 - x143*x274 - x270*x522 - x270*x524 - x306*x96 - x319*x92 - x320*x92) - x276*x642 - x317*x510 + x321*x511 + x321*x643 + x504*x783 - x506*x781 + x636*x781 + x638*x817 + x644*x793 - x85*(3*B0*q0*q2*x148*x6 + B0*x824 + 3*B1*q0*q2*x138*x6 + B1*q1*x6*x823 + 3*B2*q0*q2*x151*x6 + B2*x827 - x143*x269 - x270*x514 - x270*x645 - x306*x91 - x311*x92 - x316*x92)
    x829 = x273*x80
    x830 = x143*x829
    x831 = q0*x829
    x832 = x308*x95
    x833 = 3*x400
    x834 = x428*x833
    x835 = x143*x785
    x836 = x167*x783
    x837 = -x306*x662 + x322*x529
    x838 = x395*x781
    x839 = x322*x541
    x840 = q0*x306
    x841 = 2*q2
    x842 = x364*x586
    x843 = B2*q1
    x844 = q2*x201
    x845 = x367*x844
    x846 = x767*x843 - x843 + x845
    x847 = B1*q2
    x848 = x566*x847 - x847
    x849 = x846 + x848
    x850 = T2*q1
    x851 = x207*x435
    x852 = x767*x850 - x850 + x851
    x853 = T1*q2
    x854 = x566*x853 - x853
    x855 = -x852 - x854
    x856 = x20*x855
    x857 = x209*x276
    x858 = x447*x857
    x859 = x177*x856 + x277*x574 + x304*x622 + x447*x849 + x581*x858 + x585 + x592 + x787
    x860 = C1*q2
    x861 = C2*q1
    x862 = x405*x844 + x566*x860 + x767*x861 - x860 - x861
    x863 = x162*x276
    x864 = x212*x863
    x865 = x279*x699
    x866 = x20*x864 + x20*x865 + x414*x856 + x447*x862 + x599*x858 + x603 + x607 + x794
    x867 = x586*x785
    x868 = -x867
    x869 = x273*x600
    x870 = x37*x855
    x871 = x427*x857
    x872 = x239*x287 + x243*x287
    x873 = x144*x798 + x177*x870 + x288*x574 + x304*x573 + x427*x849 + x581*x871 + x868 - x869 + x872
    x874 = x279*x600
    x875 = x287*x6
    x876 = x604*x793
    x877 = x287*x418
    x878 = x212*x875 + x37*x864 + x37*x865 + x414*x870 + x421*x798 + x427*x862 + x599*x871 + x628*x877 - x874 - x876
    x879 = x31*x855
    x880 = x377*x857
    x881 = -x705 + x706
    x882 = x222*x304 + x222*x307
    x883 = x177*x879 + x282*x574 + x304*x613 + x377*x849 + x581*x880 - x702 + x881 + x882
    x884 = -x212*x600 + x279*x717 + x308*x718 + x31*x864 + x31*x865 + x377*x862 + x414*x879 + x599*x880 - x708 + x710
    x885 = x19*x280
    x886 = x19*x290
    x887 = x19*x284
    x888 = x80*x849
    x889 = x276*x505
    x890 = q1*q5
    x891 = q2*q4
    x892 = x495*x844 + x566*x891 + x767*x890 - x890 - x891
    x893 = q1*x312 + q2*x249 - q2*x739 - x892
    x894 = x199*x312 - x201*x892 + x250*x270 + x306 - x492*x709
    x895 = x201*x313 + x241 + x249*x268 - x270*x892 - x402*x825
    x896 = -x153*x209*x309 + x157*x246*x273 + x164*x888 + x177*(T0*q0*x6*x893 + 3*T0*q1*q2*x148*x6 + 3*T1*q1*q2*x138*x6 + T1*x894 + 3*T2*q1*q2*x151*x6 + T2*x895 - x201*x320 - x205*x306 - x207*x306 - x241*x274 - x256*x270 - x258*x270) - x254*x889 + x259*x581*x793 + x259*x819 - x317*x745 + x321*x581*x606 + x321*x641 + x504*x857 - x506*x855 + x636*x855 + x640*x817 - x85*(B0*q0*x6*x893 + 3*B0*q1*q2*x148*x6 + 3*B1*q1*q2*x138*x6 + B1*x894 + 3*B2*q1*q2*x151*x6 + B2*x895 - x200*x306 - x201*x310 - x201*x316 - x241*x269 - x247*x270 - x253*x270)
    x897 = q1*x829
    x898 = x395*x855
    x899 = x204*x308
    x900 = x273*x628
    x901 = x586*x833
    x902 = x241*x785
    x903 = q1*x785
    x904 = x167*x857
    x905 = q2*x829
    x906 = x322*x668
    x907 = x14*x287
    x908 = q2*x535
    x909 = x2*x364
    x910 = 3*q2**3
    x911 = x6*x910
    x912 = x268*x367 + x268*x372 + x368 + x681
    x913 = B2*x911 - x374 + x912
    x914 = x268*x383 + x268*x685 + x381 + x684
    x915 = 3*T2*q2 - T2*x911 - x914
    x916 = x20*x915
    x917 = 2*x304
    x918 = x276**2
    x919 = x447*x918
    x920 = 3*x2
    x921 = x674*x920 + x692
    x922 = x177*x916 + x447*x913 + x581*x919 - 2*x796 - 2*x799 + x808*x917 + x921
    x923 = x2*x601
    x924 = C2*x911 + x268*x405 + x268*x408 + x406 - x409 + x696
    x925 = 2*x279
    x926 = x863*x925
    x927 = x20*x926 + x414*x916 + x447*x924 + x599*x919 + x695 - 2*x805 - 2*x806 + x826*x923
    x928 = x31*x915
    x929 = x377*x918
    x930 = x398 + x729*x920
    x931 = x177*x928 + x377*x913 + x581*x929 + x774*x917 - 2*x867 - 2*x869 + x930
    x932 = x31*x926 + x377*x924 + x402*x923 + x414*x928 + x422 + x599*x929 - 2*x874 - 2*x876
    x933 = 3*x286
    x934 = x181*x933
    x935 = x427*x918
    x936 = x37*x915
    x937 = x177*x936 + 2*x287*x307 + x287*x917 + x427*x913 + x581*x935 + x800*x917 + x934
    x938 = 2*x308
    x939 = x37*x926 + x414*x936 + x427*x924 + x441*x933 + x599*x935 + x875*x925 + x877*x938
    x940 = 2*x268
    x941 = x400*x920
    x942 = 2*x905
    x943 = x80*x913
    x944 = 2*x315
    x945 = x785*x841
    x946 = x167*x918
    x947 = x395*x915
    x948 = x273*x938
    x949 = 2*q5
    x950 = q5*x911 + x268*x495 + x268*x496
    x951 = x268*x949 + x270*x489 + x270*x738 - x270*(x493 - x497 + x740 + x950) + x312*x940 - x492*x910 + 3*x67 - x949
    x952 = 4*q2*q5 + 2*q2*x312 - 3*x268*x58 - x518 - x747 - x950
    x953 = x164*x943 + x177*(T0*q0*x6*x952 + 3*T0*x148*x2*x6 + T1*q1*x6*x952 + 3*T1*x138*x2*x6 + 3*T2*x151*x2*x6 + T2*x951 - x157 - x318*x765 - x319*x765 - x320*x765) + x273*x508*x817 - 2*x317*x889 + x321*x746*x793 + 2*x321*x819 - x503*x918 + x504*x918 - x506*x915 + x636*x915 - x85*(B0*q0*x6*x952 + 3*B0*x148*x2*x6 + B1*q1*x6*x952 + 3*B1*x138*x2*x6 + 3*B2*x151*x2*x6 + B2*x951 - x11*x6*x944 - x153 - x310*x765 - x311*x765)
    x954 = x2*x669
    x955 = 2*x306
    x956 = x400*x955
    x957 = 8*x270
    x958 = x124*x19
    x959 = -x133
    x960 = x136*x19
    x961 = q4*(x127*x8 + x128*x24) + q5*(x130*x8 + x131*x24) - x121
    x962 = -x19*x961 + x88
    x963 = x30*x460
    x964 = x456*x47
    x965 = x339*x550
    x966 = 2*x115
    x967 = x162*x330
    x968 = x19*x332
    x969 = x13*x332
    x970 = x100*x967 - x168*x969 - x177*(q0*x331 - x255*x966 - x384 - x386 + x97 + x98) + x187*x968 + x85*(x116*x9 + x12 - x373 - x375 - x9*x966)
    x971 = x412*x94 + x625
    x972 = x438*x94 + x811
    x973 = x14*x334
    x974 = -x193
    x975 = x339*x465
    x976 = q3*(x230*x8 + x231*x24) + q5*(x233*x8 + x234*x24) - x227
    x977 = -x19*x976 + x198
    x978 = x462*x570 + x569
    x979 = x206*x462 + x577
    x980 = x177*(x115*x206 + x979) + x209*x967 - x246*x969 + x264*x968 - x85*(x115*x570 + x978)
    x981 = x334*x668 + x585
    x982 = x203*x438 + x590
    x983 = x203*x412 + x610 + x693
    x984 = -x330
    x985 = x162*x984
    x986 = -x332
    x987 = x19*x986
    x988 = x13*x986
    x989 = -x14*x984 + x71*x986
    x990 = 2*x401
    x991 = -x266
    x992 = q3*(x24*x296 + x295*x8) + q4*(x24*x299 + x298*x8) - x292
    x993 = -x19*x992 + x267
    x994 = x462*x771 + x770
    x995 = x462*x779 + x778
    x996 = x177*(x115*x779 + x995) + x276*x967 - x309*x969 + x325*x968 - x85*(x115*x771 + x994)
    x997 = x272*x412 + x786
    x998 = x272*x438 + x797 + x921
    x999 = -x327
    x1000 = x29*(x115*x13*x6 - x20*x333) + x35*(-x31*x333 + x328) + x41*(-x333*x37 + x336)
    x1001 = x36*x460
    x1002 = x456*x48
    x1003 = x350*x550
    x1004 = x565*x720 + x568 + x571
    x1005 = x575*x720 + x576 + x578
    x1006 = x19*x343
    x1007 = x13*x168
    x1008 = x1006*x187 - x1007*x343 + x177*(x1005 + x221*x575) + x341*x597 - x85*(x1004 + x221*x565)
    x1009 = x345*x541 + x585
    x1010 = x587 + x600*x94
    x1011 = x14*x345
    x1012 = -x341
    x1013 = -x343
    x1014 = x1013*x19
    x1015 = -x1012*x14 + x1013*x71
    x1016 = 2*x1
    x1017 = x350*x465
    x1018 = -x236
    x1019 = x162*x341
    x1020 = x13*x343
    x1021 = x1006*x264 + x1019*x209 - x1020*x246 + x177*(x221*x383 + x686) - x85*(x221*x372 + x682)
    x1022 = x203*x600 + x881
    x1023 = x720*x847 + x846
    x1024 = x720*x853 + x852
    x1025 = x1006*x325 + x1019*x276 - x1020*x309 + x177*(x1024 + x221*x853) - x85*(x1023 + x221*x847)
    x1026 = x272*x600 + x868 + x930
    x1027 = x13*x309
    x1028 = x29*(-x20*x344 + x328) + x35*(x13*x221*x6 - x31*x344) + x41*(-x344*x37 + x347)
    x1029 = x1000*x465
    x1030 = x42*x460
    x1031 = x456*x49
    x1032 = x360*x550
    x1033 = x766*x940 + x769 + x772
    x1034 = x776*x940 + x777 + x780
    x1035 = x19*x354
    x1036 = -x1007*x354 + x1035*x187 + x177*(x1034 + x286*x776) + x352*x597 - x85*(x1033 + x286*x766)
    x1037 = x356*x529 + x585
    x1038 = x14*x356
    x1039 = -x352
    x1040 = -x354
    x1041 = x1040*x19
    x1042 = -x1039*x14 + x1040*x71
    x1043 = x360*x465
    x1044 = x843*x940 + x845 + x848
    x1045 = x850*x940 + x851 + x854
    x1046 = x13*x246
    x1047 = x1035*x264 - x1046*x354 + x177*(x1045 + x286*x850) + x352*x699 - x85*(x1044 + x286*x843)
    x1048 = -x301
    x1049 = -x1027*x354 + x1035*x325 + x177*(x286*x385 + x914) + x352*x863 - x85*(x286*x374 + x912)
    x1050 = x29*(-x20*x355 + x336) + x35*(-x31*x355 + x347) + x41*(x13*x286*x6 - x355*x37)
    x1051 = x361*x460
    x1052 = c2*x44
    x1053 = x19*x362
    W = x78*(x14*x77 + x3*x46 + x3*x53 + (1/4)*x5*x7)
    g[0] = x78*(q0*x79 - q0*x82 + q0*x83 + q0*x84 - q0*x86 + x123*x125 + x135*x137 - x193*x197)
    g[1] = x78*(q1*x79 - q1*x82 + q1*x83 + q1*x84 - q1*x86 + x125*x229 + x137*x238 - x197*x266)
    g[2] = x78*(q2*x79 - q2*x82 + q2*x83 + q2*x84 - q2*x86 + x125*x294 + x137*x303 - x197*x327)
    g[3] = -J*(x124*x30 + x136*x47 - x196*x339)
    g[4] = -J*(x124*x36 + x136*x48 - x196*x350)
    g[5] = -J*(x124*x42 + x136*x49 - x196*x360)
    g[6] = J*(c3*x361*x45 - x136*x43)
    g[7] = x362*x76
    H[0, 0] = x78*(cN*x462 + 4*q0*x551 - x0*x463 + x123**2*x461 - x125*(x122*x366 - x19*(q3*(x24*x455 + x451*x8) + q4*(x24*x426 + x404*x8) + q5*(x24*x444 + x437*x8)) + x363 + x365*x43) + x135**2*x457 + x137*(x19*(q3*(x24*x451 - x455*x8) + q4*(x24*x404 - x426*x8) + q5*(x24*x437 - x444*x8)) + x365*x50 - x366*x459 + x458) + x193**2*x466 - x197*(2*x119*x471 - 2*x179*x469 - 2*x185*x470 + x29*(2*x100*x487 + x139*x499 + x148*x474 - x148*x476 + x148*x477 + x148*x484 - x20*x525 + x392*x472 - 2*x396*x480 - x445*x500 + x473 - x478*x479 + x481*x482 + x485*x486 - x501*x502) + x35*(q1*x526 + x138*x474 - x138*x476 + x138*x477 + x140*x392 + x147*x483 - x31*x525 - x379*x533 - x479*x536 + x486*x534 + x502*x529 + x528 + x530*x531 + x531*x537 + x539) + x41*(q2*x526 - x151*x396*x479 + x151*x474 - x151*x476 + x151*x477 + x151*x484 + x180*x392 - x37*x525 - x428*x533 + x486*x543 + x502*x541 + x531*x542 + x531*x544 + x540 + x546) + x426*x74 + x444*x75 + x455*x73) + x423*x464 + x467*x468 + x547*x548 + x547*x549 + x552)
    H[1, 0] = x78*(q1*x562 - x125*(x122*x564 - x19*(q3*(x24*x629 + x627*x8) + q4*(x24*x621 + x617*x8) + q5*(x24*x608 + x593*x8)) + x228*x515 + x43*x563) + x137*(x19*(q3*(x24*x627 - x629*x8) + q4*(x24*x617 - x621*x8) + q5*(x24*x593 - x608*x8)) - x459*x564 + x50*x563 - x515*x630) - x197*(x213*x471 - x219*x632 - x225*x634 - x261*x633 - x263*x470 + x265*x469 + x29*(q0*x656 + q0*x664 - q1*x478 + x139*x651 - x148*x530 - x148*x537 + x148*x635 - x148*x658 + x148*x659 + x148*x663 + x160 + x178*x529 - x20*x655 + x204*x481 + x209*x487 - x241*x401 - x260*x501 + x472*x667 - x480*x589 + x485*x660 + x485*x661 + x528) + x35*(-q1*x536 + q1*x657 + q1*x665 - x1*x532 - x138*x530 + x138*x635 - x138*x658 + x138*x663 + x139*x654 + x140*x667 - x209*x675 - x222*x677 + x252*x378 + x252*x396 - x252*x674 - x31*x655 - x500*x611 + x534*x660 + x534*x661 + x535*x579 + x676) + x41*(q2*x656 + q2*x657 + q2*x664 + q2*x665 - x151*x530 - x151*x537 + x151*x635 - x151*x658 + x151*x659 + x151*x663 + x180*x667 - x37*x655 + x543*x660 + x543*x661 + x584*x649 - x589*x666 + x671 + x673) + x608*x75 + x621*x74 + x629*x73) + x229*x559 + x238*x560 + x266*x631 + x366*x556 + x366*x558 - x379*x463 + x379*x553 + x379*x554 + x379*x555 + x479*x561 + x548*x557 + x549*x557)
    H[0, 1] = H[1, 0]
    H[1, 1] = x78*(cN*x720 + 4*q1*x561 - x1*x463 + x1*x554 + x1*x555 - x125*(-x19*(q3*(x24*x701 + x694*x8) + q4*(x24*x719 + x716*x8) + q5*(x24*x711 + x707*x8)) + x228*x557 + x363 + x43*x678) + x137*(x19*(q3*(x24*x694 - x701*x8) + q4*(x24*x716 - x719*x8) + q5*(x24*x707 - x711*x8)) + x458 + x50*x678 - x557*x630) - x197*(-2*x261*x721 - 2*x263*x722 + 2*x265*x723 + x29*(x148*x725 - x148*x727 + x148*x728 + x148*x751 - x148*x754 - x20*x750 + x241*x479*x589 - x379*x752 + x472*x733 + x485*x735 - x653*x669 + x658*x749 + x674*x748 + 2*x676 + x755) + x35*(x138*x725 - x138*x727 + x138*x728 + x139*x742 + x140*x733 - x160*x712 - x252*x730 - x31*x750 + x534*x735 + x535*x687 + x538 + x639*x734 - x731*x732 + x731*x736 - x743*x744) + x41*(x151*x725 - x151*x727 + x151*x728 + x151*x751 - x151*x754 + x180*x733 - x37*x750 + x543*x735 + x546 + x584*x748 - x586*x752 + x668*x744 + x749*x757 + x749*x758 + x756) + x701*x73 + x711*x75 + x719*x74) + x229**2*x461 + x238**2*x457 + x266**2*x466 + x552 + x556*x759 + x558*x759)
    H[2, 0] = x78*(q2*x562 - x125*(x122*x765 - x19*(q3*(x24*x814 + x8*x813) + q4*(x24*x795 + x788*x8) + q5*(x24*x807 + x8*x804)) + x293*x515 + x43*x764) + x137*(x19*(q3*(x24*x813 - x8*x814) + q4*(x24*x788 - x795*x8) + q5*(x24*x804 - x8*x807)) - x459*x765 + x50*x764 - x515*x815) - x197*(x280*x471 - x284*x634 + x29*(-q2*x478 + x139*x824 - x148*x542 - x148*x544 + x148*x816 + x148*x834 + x148*x838 + x178*x541 + x183 - x20*x828 + x273*x481 + x276*x487 - x306*x401 + x306*x475 - x322*x501 + x396*x840 + x472*x836 - x480*x785 - x480*x829 + x485*x818 + x485*x832 + x540) - x290*x632 - x323*x633 - x324*x469 + x326*x470 + x35*(q1*x830 + q1*x835 - q2*x536 - x138*x542 + x138*x816 - x138*x831 + x138*x834 + x140*x836 - x276*x675 + x306*x530 + x306*x537 - x31*x828 + x534*x818 + x534*x832 + x535*x781 + x671 + x729*x823 + x837) + x41*(q2*x830 + q2*x835 + x139*x827 - x151*x542 - x151*x544 + x151*x816 - x151*x831 + x151*x834 + x151*x838 + x180*x836 - x2*x532 - x287*x677 + x315*x378 + x315*x396 - x315*x674 - x37*x828 - x500*x798 + x543*x818 + x543*x832 - x666*x785 + x839) + x73*x814 + x74*x795 + x75*x807) + x294*x559 + x303*x560 + x327*x631 + x366*x760 + x366*x762 - x428*x463 + x428*x553 + x428*x554 + x428*x555 + x479*x763 + x548*x761 + x549*x761)
    H[0, 2] = H[2, 0]
    H[2, 1] = x78*(2*q1*x763 - x125*(-x19*(q3*(x24*x866 + x8*x859) + q4*(x24*x884 + x8*x883) + q5*(x24*x878 + x8*x873)) + x228*x765 + x293*x564 + x43*x842) + x137*(x19*(q3*(x24*x859 - x8*x866) + q4*(x24*x883 - x8*x884) + q5*(x24*x873 - x8*x878)) + x50*x842 - x564*x815 - x630*x765) - x197*(-x261*x885 - x263*x886 + x265*x887 + x29*(q0*x902 - x148*x757 - x148*x758 + x148*x888 - x148*x897 + x148*x898 + x148*x901 - x148*x903 - x20*x896 + x241*x831 + x306*x658 + x472*x904 + x485*x899 + x485*x900 + x589*x840 + x670 + x673 + x674*x893 + x837) - x323*x721 - x324*x723 + x326*x722 + x35*(-x138*x757 + x138*x888 - x138*x897 + x138*x901 + x139*x894 + x140*x904 + x183 - x209*x908 - x252*x584 + x260*x668 + x273*x734 - x276*x732 + x276*x736 - x306*x724 + x306*x726 + x306*x753 - x31*x896 - x322*x743 + x534*x899 + x534*x900 + x535*x855 + x756) + x41*(q2*x902 + x139*x895 - x151*x757 - x151*x758 + x151*x888 - x151*x897 + x151*x898 + x151*x901 - x151*x903 - x160*x798 + x180*x904 - x2*x672 + x241*x905 - x260*x907 + x315*x589 + x315*x591 - x315*x729 - x37*x896 + x543*x899 + x543*x900 + x906) + x73*x866 + x74*x884 + x75*x878) + x229*x294*x461 + x238*x303*x457 + x266*x327*x466 - x463*x586 + x553*x586 + x554*x586 + x555*x586 + x556*x761 + x557*x760 + x557*x762 + x558*x761 + x561*x841)
    H[1, 2] = H[2, 1]
    H[2, 2] = x78*(cN*x940 + 4*q2*x763 - x125*(-x19*(q3*(x24*x927 + x8*x922) + q4*(x24*x932 + x8*x931) + q5*(x24*x939 + x8*x937)) + x293*x761 + x363 + x43*x909) + x137*(x19*(q3*(x24*x922 - x8*x927) + q4*(x24*x931 - x8*x932) + q5*(x24*x937 - x8*x939)) + x458 + x50*x909 - x761*x815) - x197*(x29*(x148*x941 - x148*x942 + x148*x943 - x148*x945 + x148*x947 - x20*x953 + x306*x479*x785 - x428*x956 + x472*x946 + x485*x948 + x674*x952 + x755 - x826*x954 + x831*x955 + 2*x839) - 2*x323*x885 - 2*x324*x887 + 2*x326*x886 + x35*(x138*x941 - x138*x942 + x138*x943 + x140*x946 - 2*x276*x908 - x31*x953 - x402*x954 + x534*x948 + x535*x915 + x539 - x586*x956 + x729*x952 + x897*x955 + x903*x955 + 2*x906) + x41*(x139*x951 + x151*x941 - x151*x942 + x151*x943 - x151*x945 + x151*x947 + x180*x946 - x183*x933 - 2*x322*x907 - x37*x953 + x543*x948 + x545 - x584*x944 + x785*x944 + x829*x944) + x73*x927 + x74*x932 + x75*x939) - x2*x463 + x2*x554 + x2*x555 + x294**2*x461 + x303**2*x457 + x327**2*x466 + x552 + x760*x957 + x762*x957)
    H[3, 0] = -J*(q0*x965 - x120*x958 + x135*x964 - x196*(x29*(x100*x115*x13*x19*x85 - x115*x187 - x115*x973 + x20*x970 - x446) - x335*x469 - x337*x470 - x338*x633 + x35*(x31*x970 - x334*x529 - x971) + x41*(-x334*x541 + x37*x970 - x972)) + x959*x960 + x962*x963 - x974*x975)
    H[0, 3] = H[3, 0]
    H[3, 1] = -J*(q1*x965 - x196*(-x29*(q1*x990 - x116*x144 - x20*(x177*(-q1*x331 + x979) - x209*x985 + x239*x987 + x246*x988 - x85*(-q1*x329 + x978)) + x529*x989 + x626) - x335*x723 - x337*x722 - x338*x721 + x35*(-x221*x973 + x31*x980 - x983) + x41*(x37*x980 - x981 - x982)) - x214*x958 + x238*x964 + x960*(-x211*x24 + x213*x8) + x963*x977 - x975*x991)
    H[1, 3] = H[3, 1]
    H[3, 2] = -J*(q2*x965 - x196*(-x29*(q2*x990 - x116*x181 - x20*(x177*(-q2*x331 + x995) - x276*x985 + x304*x987 + x309*x988 - x85*(-q2*x329 + x994)) + x541*x989 + x812) - x335*x887 - x337*x886 - x338*x885 + x35*(x31*x996 - x981 - x997) + x41*(-x286*x973 + x37*x996 - x998)) - x281*x958 + x303*x964 + x960*(-x24*x278 + x280*x8) + x963*x993 - x975*x999)
    H[2, 3] = H[3, 2]
    H[3, 3] = J*(x1000**2*x465 + x30**2*x460 + x456*x47**2)
    H[4, 0] = -J*(q0*x1003 + x1001*x962 + x1002*x135 - x1017*x974 - x108*x958 - x196*(x29*(x1008*x20 - x1011*x115 - x971) - x346*x633 - x348*x470 - x349*x469 - x35*(x1015*x529 + x1016*x674 - x186*x222 - x31*(x1007*x1013 - x1012*x597 + x1014*x141 + x177*(-q0*x342 + x1005) - x85*(-q0*x340 + x1004)) + x616) + x41*(x1008*x37 - x1009 - x1010)) + x960*(-x102*x24 + x107*x8))
    H[0, 4] = H[4, 0]
    H[4, 1] = -J*(q1*x1003 + x1001*x977 + x1002*x238 - x1017*x991 + x1018*x960 - x196*(x29*(x1021*x20 - x345*x529 - x983) - x346*x721 - x348*x722 - x349*x723 + x35*(-x1011*x221 + x1021*x31 + x13*x19*x209*x221*x85 - x221*x264 - x713) + x41*(x1021*x37 - x1022 - x345*x668)) - x226*x958)
    H[1, 4] = H[4, 1]
    H[4, 2] = -J*(q2*x1003 + x1001*x993 + x1002*x303 - x1017*x999 - x196*(x29*(-x1009 + x1025*x20 - x997) - x346*x885 - x348*x886 - x349*x887 - x35*(x1015*x668 + x1016*x584 - x181*x222 - x31*(-x1012*x863 + x1013*x1027 + x1014*x304 + x177*(-q2*x342 + x1024) - x85*(-q2*x340 + x1023)) + x882) + x41*(-x1011*x286 + x1025*x37 - x1026)) - x285*x958 + x960*(-x24*x283 + x284*x8))
    H[2, 4] = H[4, 2]
    H[4, 3] = J*(x1028*x1029 + x36*x963 + x48*x964)
    H[3, 4] = H[4, 3]
    H[4, 4] = J*(x1028**2*x465 + x36**2*x460 + x456*x48**2)
    H[5, 0] = -J*(q0*x1032 + x1030*x962 + x1031*x135 - x1043*x974 - x114*x958 - x196*(x29*(x1036*x20 - x1038*x115 - x972) + x35*(-x1010 + x1036*x31 - x1037) - x357*x633 - x358*x469 - x359*x470 - x41*(x1042*x541 - x186*x287 + 2*x2*x674 - x37*(x1007*x1040 - x1039*x597 + x1041*x141 + x177*(-q0*x353 + x1034) - x85*(-q0*x351 + x1033)) + x803)) + x960*(-x111*x24 + x113*x8))
    H[0, 5] = H[5, 0]
    H[5, 1] = -J*(q1*x1032 + x1030*x977 + x1031*x238 - x1043*x991 - x196*(x29*(-x1037 + x1047*x20 - x982) + x35*(-x1022 - x1038*x221 + x1047*x31) - x357*x721 - x358*x723 - x359*x722 - x41*(x1042*x668 - x144*x287 + x2*x730 - x37*(-x1039*x699 + x1040*x1046 + x1041*x239 + x177*(-q1*x353 + x1045) - x85*(-q1*x351 + x1044)) + x872)) - x220*x958 + x960*(-x217*x24 + x219*x8))
    H[1, 5] = H[5, 1]
    H[5, 2] = -J*(q2*x1032 + x1030*x993 + x1031*x303 - x1043*x999 + x1048*x960 - x196*(x29*(x1049*x20 - x356*x541 - x998) + x35*(-x1026 + x1049*x31 - x356*x668) - x357*x885 - x358*x887 - x359*x886 + x41*(-x1038*x286 + x1049*x37 + x13*x19*x276*x286*x85 - x286*x325 - x934)) - x291*x958)
    H[2, 5] = H[5, 2]
    H[5, 3] = J*(x1029*x1050 + x42*x963 + x49*x964)
    H[3, 5] = H[5, 3]
    H[5, 4] = J*(x1001*x42 + x1002*x49 + x1028*x1050*x465)
    H[4, 5] = H[5, 4]
    H[5, 5] = J*(x1050**2*x465 + x42**2*x460 + x456*x49**2)
    H[6, 0] = J*(x1051*x123 - x1052*x135 + x958*(q3*x959 + q4*x129 + q5*x132) - x960*x961)
    H[0, 6] = H[6, 0]
    H[6, 1] = J*(x1051*x229 - x1052*x238 + x958*(q3*x232 + q4*x1018 + q5*x235) - x960*x976)
    H[1, 6] = H[6, 1]
    H[6, 2] = J*(x1051*x294 - x1052*x303 + x958*(q3*x297 + q4*x300 + q5*x1048) - x960*x992)
    H[2, 6] = H[6, 2]
    H[6, 3] = -J*(-x1052*x47 - x124*x47 + x136*x30 + x361*x963)
    H[3, 6] = H[6, 3]
    H[6, 4] = -J*(x1001*x361 - x1052*x48 - x124*x48 + x136*x36)
    H[4, 6] = H[6, 4]
    H[6, 5] = -J*(x1030*x361 - x1052*x49 - x124*x49 + x136*x42)
    H[5, 6] = H[6, 5]
    H[6, 6] = J*(x124*x43 + x136*x361 + x361**2*x460 + x43**2*x456)
    H[7, 0] = x362*(x19*x974 - x76*x92)
    H[0, 7] = H[7, 0]
    H[7, 1] = x362*(x19*x991 - x201*x76)
    H[1, 7] = H[7, 1]
    H[7, 2] = x362*(x19*x999 - x270*x76)
    H[2, 7] = H[7, 2]
    H[7, 3] = x1000*x1053
    H[3, 7] = H[7, 3]
    H[7, 4] = x1028*x1053
    H[4, 7] = H[7, 4]
    H[7, 5] = x1050*x1053
    H[5, 7] = H[7, 5]
    H[7, 6] = 0
    H[6, 7] = H[7, 6]
    H[7, 7] = x362
    return W


@njit
def beam_k(q, T, A2, A3):
    """Metric a and curvature measures (k1, k2, k3) for the
    same kinematics as beam_gp."""
    q0 = q[0]
    q3 = q[3]
    T0 = T[0]
    B0 = A2[0]
    C0 = A3[0]
    q1 = q[1]
    q4 = q[4]
    T1 = T[1]
    B1 = A2[1]
    C1 = A3[1]
    q2 = q[2]
    q5 = q[5]
    T2 = T[2]
    B2 = A2[2]
    C2 = A3[2]
    q6 = q[6]
    q7 = q[7]
    x0 = q0**2 + q1**2 + q2**2
    x1 = 1/math.sqrt(x0)
    x2 = q0*x1
    x3 = q1*x1
    x4 = q2*x1
    x5 = 1/(T0*x2 + T1*x3 + T2*x4 + 1)
    x6 = T0 + x2
    x7 = x1*x5
    x8 = x7*(C0*q0 + C1*q1 + C2*q2)
    x9 = C0 - x6*x8
    x10 = 1/x0
    x11 = x10*(q0*q3 + q1*q4 + q2*q5)
    x12 = q0*x11 - q3
    x13 = B0*q0 + B1*q1 + B2*q2
    x14 = x10*x13
    x15 = q1*x11 - q4
    x16 = q2*x11 - q5
    x17 = x1*(B0*x12 + B1*x15 + B2*x16) - x14*x5*(T0*x12 + T1*x15 + T2*x16)
    x18 = T1 + x3
    x19 = C1 - x18*x8
    x20 = T2 + x4
    x21 = C2 - x20*x8
    x22 = math.sin(q6)
    x23 = x13*x7
    x24 = B0 - x23*x6
    x25 = math.cos(q6)
    x26 = B1 - x18*x23
    x27 = B2 - x20*x23
    return x0, q7 + x19*x5*(x14*x15 + x17*x18) + x21*x5*(x14*x16 + x17*x20) + x5*x9*(x12*x14 + x17*x6), x10*(q3*(x22*x24 - x25*x9) + q4*(-x19*x25 + x22*x26) + q5*(-x21*x25 + x22*x27)), x10*(q3*(x22*x9 + x24*x25) + q4*(x19*x22 + x25*x26) + q5*(x21*x22 + x25*x27))
