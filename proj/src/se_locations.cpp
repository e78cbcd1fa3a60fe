#include "sim.hpp"

namespace dart2 {

// Frozen 2-D hypothesis locations for the synthetic study: 1000 points
// drawn uniformly on [0,5]^2 from a calibrated seed so that the default
// signal-field coefficients mark exactly 216 hypotheses as alternatives.
// Values are hexfloat so the fixture is bit-stable.
const std::vector<Point2>& builtin_locations() {
  static const std::vector<Point2> pts = {
      {0x1.3abf80ce51a16p+1, 0x1.ccfb2af1e180ap+0},
      {0x1.c605be0d5e5aep+1, 0x1.b9496f91cbf3cp+1},
      {0x1.2e5306b1ef9c0p+1, 0x1.329750e1bae4ep+1},
      {0x1.19214cbca00c0p-5, 0x1.216bb66db25d0p+2},
      {0x1.1597f3f91f077p+1, 0x1.2f1b536cbd368p+1},
      {0x1.5f8c126b94d94p-3, 0x1.2fe1e22f51fa8p+2},
      {0x1.7a1b204ed4e0ap+1, 0x1.0f7969f1252e5p+1},
      {0x1.de5e68b432f36p-1, 0x1.3ae8e46301796p+2},
      {0x1.b9bdd58e723eap+1, 0x1.214350640dcf9p+2},
      {0x1.a91992bbc75a8p-4, 0x1.3f05ba7f7dedfp+2},
      {0x1.924dfd2b98463p+0, 0x1.0c9f98432fa14p+0},
      {0x1.638b9259d8208p-4, 0x1.e48d50ef525fep-1},
      {0x1.73dc9716296eap+0, 0x1.5f23495f5527ap+0},
      {0x1.9b07fa891b5a4p+1, 0x1.ed861a4ecd3f6p-2},
      {0x1.64cba291beda6p-2, 0x1.eb17aad70f7dap+1},
      {0x1.19777188b7c17p+2, 0x1.5fcab356a35f4p-1},
      {0x1.032cfc850fb0ep+2, 0x1.115d19acb9fb5p+2},
      {0x1.7c5c15d6c354ep+0, 0x1.2d41f00c5c46cp+2},
      {0x1.5b2edfd66b14cp+1, 0x1.e05744ccd3bc2p-1},
      {0x1.bfbcdbf0c7e2ap+1, 0x1.34a7fcad29ce7p+2},
      {0x1.8f91736a4c8eep+1, 0x1.e655bd38d3f26p+1},
      {0x1.53e512590cc4ep+1, 0x1.2d2c19700a287p+2},
      {0x1.0371bcea9e774p-2, 0x1.f46d049271585p-1},
      {0x1.baafea6f6dd29p+0, 0x1.b47d78b66bd20p-4},
      {0x1.5523c0dd9a90ep+1, 0x1.59fa456c28ac8p+0},
      {0x1.3d780b77f8ba0p+2, 0x1.2dd14b0efa076p+0},
      {0x1.8a9ba9ae875adp+1, 0x1.0e0d818688575p+1},
      {0x1.0c30576a85bfcp-3, 0x1.742615c18fe6dp+0},
      {0x1.0de76aebb1410p+2, 0x1.7d61bd6cb0892p-1},
      {0x1.30e700603791fp+1, 0x1.0767e831c7658p+2},
      {0x1.1b271578a705fp+2, 0x1.68d3bd2602a6cp+1},
      {0x1.c4629c82a3b0fp+1, 0x1.5e0ea7ca772e2p-1},
      {0x1.f827932c04220p+0, 0x1.ce3cfdb7bc400p+0},
      {0x1.24fb0eb256301p+1, 0x1.8a4364e8aa3c0p+0},
      {0x1.936326d1e1df0p+1, 0x1.c7551fa2888a8p+1},
      {0x1.c17ee7b9c994fp-1, 0x1.897ccf8654ef9p-1},
      {0x1.b878dde3d9438p-1, 0x1.474dfa252a464p+1},
      {0x1.0abb6b2447a71p+0, 0x1.df926a828ad5dp-1},
      {0x1.1c0171ebbe6fap+1, 0x1.bacae59ec3a5ep+1},
      {0x1.cc78f948aa57dp+1, 0x1.293cdad4d66cfp+2},
      {0x1.912641b5ca027p+1, 0x1.b676351cf264bp+1},
      {0x1.604da07668112p-2, 0x1.dce8c38e38da1p+1},
      {0x1.36d2c95c7d102p+2, 0x1.2877bef1f2a6bp+0},
      {0x1.01bbc353d4336p+2, 0x1.04f6c4d18f11fp+2},
      {0x1.4e0bd7f822b18p+0, 0x1.25f39abc727f8p+2},
      {0x1.3a78727341053p+2, 0x1.aeb44cb74ca32p-2},
      {0x1.c031bbb20e013p-1, 0x1.6dd0861b1cc05p+1},
      {0x1.1ff5876b7b2bap-2, 0x1.c76da21e9666cp+0},
      {0x1.0608ca30fa688p+2, 0x1.bba04d7b63c15p-1},
      {0x1.7e30fbc994fa5p-1, 0x1.36b43295e8768p+1},
      {0x1.69d93d44015fap+1, 0x1.359e6e3ddb18ap+2},
      {0x1.4679c24eb4812p+0, 0x1.ad6a4dd3db2a0p+1},
      {0x1.4f33cc373ef82p+0, 0x1.135a5f65f0b4fp+2},
      {0x1.139c7c4552b58p+0, 0x1.1714bde5a1688p+0},
      {0x1.18f4bc2de62aep+0, 0x1.033cfdbac7f82p+2},
      {0x1.d0523003f9fadp+1, 0x1.33628c0238070p-4},
      {0x1.8178778a379bap+1, 0x1.f173a2b46f9b5p+0},
      {0x1.4dc00dd0f83bcp-3, 0x1.53257c85ba84dp+1},
      {0x1.3e86ba8c200fep+2, 0x1.11de0316561ddp+2},
      {0x1.ebd63eb423498p+0, 0x1.dd868e72f6309p+0},
      {0x1.722a1d840bf2cp+0, 0x1.11037a4ec73fcp+2},
      {0x1.ba086d0d0b07cp+1, 0x1.0f075a3c8532cp+2},
      {0x1.86aeaad4cae5dp+0, 0x1.78f0a0257862ep-1},
      {0x1.7281a3bde69cap+1, 0x1.d570846730344p-3},
      {0x1.0072e2db4cdc3p+1, 0x1.30bc1f223ea39p+1},
      {0x1.1649e40ed85fcp+1, 0x1.8f108af179a76p+1},
      {0x1.b38bbed9f5d93p+1, 0x1.fe68254c797c4p+1},
      {0x1.254cbad1fa8e6p+1, 0x1.310108a2e4774p+2},
      {0x1.aa15b82661748p+0, 0x1.9f289b8db63c2p-1},
      {0x1.160660451b6eep+1, 0x1.26df59679d7d5p+1},
      {0x1.f18563d1604b4p+0, 0x1.a35febc2bd246p+1},
      {0x1.08d517fe966d2p-2, 0x1.b79eb98770a9ep+1},
      {0x1.7fb2197e6005cp-2, 0x1.bec20ccd4626ap-1},
      {0x1.7c91661d215a6p-2, 0x1.193f74dd84025p-1},
      {0x1.97f61357f3e3bp-1, 0x1.1f8716501e0c4p-2},
      {0x1.9d1dea6b7315ep+0, 0x1.f981320583261p+1},
      {0x1.ade4db0d21c12p+1, 0x1.77031476e2e9ap-1},
      {0x1.0eeda7d8fe9a2p-1, 0x1.5ea9d755e4450p+1},
      {0x1.1c156ea8e0c42p+1, 0x1.3e78913858668p+1},
      {0x1.0c907276ae634p+2, 0x1.b48555673add4p+1},
      {0x1.39fdb96b5babep+1, 0x1.3bfc79490d928p+1},
      {0x1.3c827b0f05df8p-3, 0x1.a777da852d76cp+0},
      {0x1.b5480ff4017fdp+1, 0x1.6fc9ee0f0c02fp+0},
      {0x1.2a4b958711299p+2, 0x1.8cf441559044ap+1},
      {0x1.7f22a377675f8p-3, 0x1.05ed3046e29ccp+2},
      {0x1.c9ada68b86e7cp+1, 0x1.f59e05f6a4f38p-3},
      {0x1.085ca801f85d0p+1, 0x1.a9d2069dff8c2p-1},
      {0x1.9bd8b2f4e9e00p+1, 0x1.ffd8c1a5c67bdp+1},
      {0x1.6f0cc5bf819dbp+1, 0x1.1950cfce58c28p+2},
      {0x1.28061718c389ep-2, 0x1.c93ec5e4f1dbap+1},
      {0x1.c3ebc88256043p+1, 0x1.ebbac1dace55ep+0},
      {0x1.10d7c8eacdf85p+2, 0x1.efdba6bee29b6p+1},
      {0x1.20bac0c10ed77p+0, 0x1.15574d366b114p+2},
      {0x1.fa770e74edff8p-2, 0x1.2fe015ad1baafp+2},
      {0x1.3f84cdb198a91p+1, 0x1.388d93a638196p+0},
      {0x1.900703985418ep+1, 0x1.36c57b3d08191p+1},
      {0x1.63cf812b84f69p+1, 0x1.23b48161cf814p+1},
      {0x1.ed62309c1338fp+0, 0x1.89203d8d2c624p+1},
      {0x1.6268ebaee5766p-1, 0x1.9639e446315b4p-1},
      {0x1.6a11b0eb7c727p-1, 0x1.fa6c43fc1bd3ep+0},
      {0x1.4c024c5621da6p+0, 0x1.2eba683f02b3dp+2},
      {0x1.25e546d615561p+1, 0x1.397924ceb58b9p+2},
      {0x1.fca2788135512p-1, 0x1.959f4c9b1288cp+1},
      {0x1.32536cdeb7078p+2, 0x1.aaaf7a6916bd6p+0},
      {0x1.fd2c848162800p-10, 0x1.253e709b03772p+1},
      {0x1.7affd8bdddd68p+1, 0x1.c765867cf6624p+0},
      {0x1.d3931b0fd862fp-1, 0x1.15353fac18779p+2},
      {0x1.c78734eb89205p+1, 0x1.1b8eb204deac3p+1},
      {0x1.ea76783176a7ap+1, 0x1.b3b8a12f17d42p+1},
      {0x1.0ca048ad01d03p+0, 0x1.44e21b82f6000p+0},
      {0x1.03f9f86291177p+1, 0x1.05e41da48a6f8p+2},
      {0x1.362bf08ca06fap+2, 0x1.2572b6f5dee56p+2},
      {0x1.babf55ed47b06p+0, 0x1.bb58b2588cb07p-1},
      {0x1.09fc3328c503ep+1, 0x1.22c8935858d88p+2},
      {0x1.bbc66d62c0ce4p+0, 0x1.0bd0e74e818c1p+1},
      {0x1.31b3ffb15ffa4p-3, 0x1.0da37eb04fb17p+2},
      {0x1.8b2b739495f00p-9, 0x1.83888698a5374p+1},
      {0x1.831bbc29cd21dp+1, 0x1.75f2e7174d89bp+1},
      {0x1.66c3122fa811cp+0, 0x1.18fce26445294p+1},
      {0x1.4ed35fe574172p-1, 0x1.83e93aafcde0ap+1},
      {0x1.a9635147f7868p-2, 0x1.3ac69f9572f46p+1},
      {0x1.406bdadcc74f4p+0, 0x1.3763bc64eb957p+2},
      {0x1.503aa3735e8d6p+1, 0x1.24bf051f88edap+0},
      {0x1.26c51dce05a64p+2, 0x1.c54d993bf29e9p+1},
      {0x1.079e641bcfdeep+1, 0x1.55d180484dacbp+1},
      {0x1.9088e0123446ep+1, 0x1.13eafad2323d5p+2},
      {0x1.f66cf76d38b4cp+1, 0x1.a632b44510012p+0},
      {0x1.de5ca4f526d60p+1, 0x1.b0d7313dc5c7cp-2},
      {0x1.a7ec35e98b740p-3, 0x1.2a1b3bc59964bp+0},
      {0x1.f9b06da059628p-4, 0x1.355e9d2ad3848p+1},
      {0x1.25916ffcc1c34p+0, 0x1.654aad07b80f9p+1},
      {0x1.744cbf8305fecp+1, 0x1.a88589d5caa33p-1},
      {0x1.2ddc8cd091aaap+1, 0x1.257e55c32b030p-3},
      {0x1.72f3a29e3ba58p-4, 0x1.12e0dabbf3647p+2},
      {0x1.2af6cda7ec7abp-1, 0x1.bf3e9f3362a26p-1},
      {0x1.7b741906b5b48p-4, 0x1.b827656a56c00p+1},
      {0x1.ab53f347d35c6p+0, 0x1.84b215ab2c210p+1},
      {0x1.93d03ec11e9c8p-1, 0x1.d70ca5af58dedp+1},
      {0x1.04984559f81d4p+1, 0x1.9523b5da9b704p-3},
      {0x1.d2a553faf8f61p+1, 0x1.c51dc853468e8p-1},
      {0x1.3ff45ebf25ecfp+1, 0x1.0344ceeb1842ap+2},
      {0x1.7940d1ef6116cp-1, 0x1.c31e5e552d78fp+1},
      {0x1.739685bbca896p+1, 0x1.9969c502735aap+0},
      {0x1.d13239fa90178p+1, 0x1.6d3f7ac3a9d25p+1},
      {0x1.4cd7c9861d12bp+1, 0x1.0107250c18d76p+2},
      {0x1.8f0202e84ad8bp+1, 0x1.6b02c3a83c958p+1},
      {0x1.9bc63dfbc9ac1p-1, 0x1.97238e11e9384p+1},
      {0x1.d9398ee52c307p-1, 0x1.8367ef93ede93p+1},
      {0x1.244f97761a9a8p+2, 0x1.2c1531af20d7dp+1},
      {0x1.2504ffc09c627p-1, 0x1.e9309ac65e722p+1},
      {0x1.1b58950b4ecfap+1, 0x1.69a9b6b940f4fp+0},
      {0x1.ba6b422f9bc1ap+0, 0x1.040025147402ap+2},
      {0x1.f81614ad16b1ap+0, 0x1.335086abe4d5cp-3},
      {0x1.18f9a07dfb20fp+2, 0x1.3c294e63ea714p-1},
      {0x1.9bd4c72dfb8fcp+1, 0x1.2a9da49dbfe19p+2},
      {0x1.1afc01da2c30cp+0, 0x1.20ff5ecfd46dap-1},
      {0x1.1fde3829c8be4p-3, 0x1.f7a449c3bd191p+0},
      {0x1.790d2602fd9a8p+0, 0x1.1f69518ca6e12p+2},
      {0x1.724ca711130c6p+1, 0x1.b12b8d41e6a08p+1},
      {0x1.380c3b702825ap+1, 0x1.3611908bfee06p+2},
      {0x1.ef99b2b72eba6p+1, 0x1.2fff8bda55050p+1},
      {0x1.2ab6631f7e139p+2, 0x1.22cf00edf7db1p+2},
      {0x1.11e67100882bbp+2, 0x1.2a8e69b00a2a2p-1},
      {0x1.5e7b47e763738p+1, 0x1.1f9a33fc773cdp+1},
      {0x1.8c544fa283a56p+0, 0x1.1c458e5a49ba8p+2},
      {0x1.d86565769ff27p+1, 0x1.f5463cb48a9c0p-2},
      {0x1.281339b94c41ap+2, 0x1.3acd5814f3c5dp-1},
      {0x1.877e809eac82ep+1, 0x1.ff212ea0286b6p+0},
      {0x1.9476539ca3717p+1, 0x1.3b87386be76c2p+2},
      {0x1.59c6e7608bb26p+0, 0x1.bd60481476b8fp-1},
      {0x1.d1ec066ba5a2cp+1, 0x1.570f1d728e884p+0},
      {0x1.60154335ad2edp-1, 0x1.50bc8d73261e8p+1},
      {0x1.931811710efd4p+1, 0x1.2cfabd1de271ep+2},
      {0x1.657139f34f824p+1, 0x1.02e26bf3e3463p+2},
      {0x1.34a1762d35c93p+2, 0x1.99832b7702c4ap-2},
      {0x1.8a1fb0f1c6d34p-1, 0x1.67a5c36742b60p-5},
      {0x1.35ce602427ed0p+2, 0x1.34943d0c1a31ap+1},
      {0x1.dbd980aa72ed9p+0, 0x1.aa7f75fb1e6dfp+1},
      {0x1.6ebfb3b2e7e7fp+1, 0x1.532f89c0b4a5ap-1},
      {0x1.77aa0d2d3d420p+0, 0x1.0b3b26616108ep+2},
      {0x1.35b9687e849aap+0, 0x1.54850778d5784p+1},
      {0x1.bf700ff5f2478p-4, 0x1.1b0844cc99f82p+2},
      {0x1.63288e638cffep-1, 0x1.24f0aad73b75dp+2},
      {0x1.a2a6e0a44e30dp+1, 0x1.36c44add55356p+2},
      {0x1.af165f025565cp+0, 0x1.20875aa3cf310p+2},
      {0x1.3cc3a81be9190p+2, 0x1.5b475913f04b0p+1},
      {0x1.af3180ad77587p+0, 0x1.22bead23d6923p+2},
      {0x1.1af50bb31e8b2p+2, 0x1.51c379c8fa0ccp+1},
      {0x1.04a17e37834f3p-1, 0x1.1f168e4be35d2p+0},
      {0x1.893e46aaf8070p-4, 0x1.d5835255b71b8p+1},
      {0x1.30be066b87304p+1, 0x1.e0264a62dd976p+0},
      {0x1.f17bb610ddf6fp+0, 0x1.cb0631f04a568p+1},
      {0x1.0fd8c0b7d5293p+2, 0x1.045703a17f4bep+2},
      {0x1.232e8546e10f0p+0, 0x1.5ae58f30d0952p+0},
      {0x1.19563cec4ad24p+2, 0x1.2ab7eb166a86bp+2},
      {0x1.eabc0c2b77283p+1, 0x1.1943179935968p-2},
      {0x1.2fccdadab6affp+0, 0x1.aa5d007073a56p+0},
      {0x1.0fd8177ad9a60p-3, 0x1.477c92623b105p+0},
      {0x1.894b64db1c2bcp+0, 0x1.497ccd0daf042p+1},
      {0x1.b5ffaee90e297p+1, 0x1.3a4005d96f448p+2},
      {0x1.53e64111fa18ap-2, 0x1.d68d92a03e85cp+1},
      {0x1.c9092396fa0aep-1, 0x1.8c6b633cc37b5p-1},
      {0x1.357936ee8caeep+1, 0x1.2bbc551e9153bp+2},
      {0x1.3b23424050bb6p+2, 0x1.afb7a8fc4c6fcp+1},
      {0x1.2cd43f9317564p-1, 0x1.0a00e513dc400p+2},
      {0x1.01ab07bb927b2p+0, 0x1.56dc0032b8b28p+1},
      {0x1.0d590fa25d58dp+2, 0x1.06f07d74b9994p-3},
      {0x1.24a7c615d5225p-1, 0x1.445ee7be3d87bp+1},
      {0x1.cce7b5c10a14ap-1, 0x1.242fee618aa19p+2},
      {0x1.061d49bd81f22p+2, 0x1.d076d72df9c72p+0},
      {0x1.81717af696a90p-5, 0x1.158d0fd933789p+0},
      {0x1.91d5d258ebfe9p-1, 0x1.05fdf160d2960p+1},
      {0x1.0f9c7b6d140a0p+2, 0x1.417c6b27db640p-2},
      {0x1.4d367c58c4510p+1, 0x1.2819e5c0c1bddp+2},
      {0x1.3229615921afdp+2, 0x1.868913f2bd8bep-1},
      {0x1.5c009b530879fp+0, 0x1.7c6b4d3f4e67dp+1},
      {0x1.da6c9ad1c2b2cp+1, 0x1.7cd32f06ed410p+1},
      {0x1.122231dc81c34p+2, 0x1.a4471558687e0p-1},
      {0x1.d3df523351ad8p+0, 0x1.5c708227e6e08p+1},
      {0x1.8f2b795538a11p+1, 0x1.4309bc6eb7be8p+1},
      {0x1.6181295cbcfc4p+1, 0x1.15f19ddcd045bp+2},
      {0x1.36ef0bdad9eb0p-3, 0x1.3da43097d69c9p+2},
      {0x1.3bed9fb9eb8e7p+1, 0x1.23bc774e25c26p+2},
      {0x1.639f795044fd9p-1, 0x1.2d9f51d65a577p+1},
      {0x1.03f4c3677b286p+0, 0x1.bd7540ef4c98cp+1},
      {0x1.f2bc1b990ac4ep+1, 0x1.5a7d840700c30p-2},
      {0x1.9a77a561313e8p-4, 0x1.0f417f6a4cdd1p+2},
      {0x1.5eaf6d255c1f5p+1, 0x1.d9fcda90456b8p+1},
      {0x1.7bc1d246047d4p-1, 0x1.2a7cbde2eee98p+2},
      {0x1.8d13f2d6e5ad7p+1, 0x1.3e04c46f18795p+2},
      {0x1.39865bb912dcap+2, 0x1.6692fdce1a9fcp-2},
      {0x1.317f6ac0c8bdep+1, 0x1.f58abed2adbacp-2},
      {0x1.ec86b2b28ab8bp+1, 0x1.62b2a2a306d54p-3},
      {0x1.15f8afb882f1ap+0, 0x1.33409c2721ef2p-2},
      {0x1.0472ea9a3d07bp+1, 0x1.13fa8fe0e0a0ep-1},
      {0x1.372cd0a25cfedp+1, 0x1.26e14a2ad5a5bp+1},
      {0x1.1ac97fe6724a7p+2, 0x1.1b8b26e8dba37p+2},
      {0x1.29d1e4b6a7a28p+2, 0x1.2044fffb0833ap+1},
      {0x1.eacced1c6fd20p-3, 0x1.1f75bdc0829f9p+2},
      {0x1.572bf593d48c0p-2, 0x1.537193a7a31c8p-3},
      {0x1.0b38bfd3bcc1cp+0, 0x1.4a9aae04be7ddp+0},
      {0x1.32f03a8bf674cp+2, 0x1.24000f8d71b19p+2},
      {0x1.a362b2279ef2cp+1, 0x1.91266283af6f8p+0},
      {0x1.279986d67a46cp-3, 0x1.7e1aae51bc2b1p-1},
      {0x1.f42984d600648p-3, 0x1.2929d293044c0p-2},
      {0x1.3255c9670d187p+1, 0x1.1e8370dbb7b48p+2},
      {0x1.bb0b313713fcap+1, 0x1.4ed0f94881a80p-4},
      {0x1.29434c50767b9p+2, 0x1.3165abaa8fd89p+1},
      {0x1.e0dc6285c78c5p-1, 0x1.36321189e573dp+2},
      {0x1.2d66fbf432d1dp-1, 0x1.395466f1b6517p+1},
      {0x1.37da4a5573dfdp+1, 0x1.a6d57d007933dp+1},
      {0x1.7f05668593ad3p+1, 0x1.f76b443bd9aecp-2},
      {0x1.f7860f42e2985p+1, 0x1.9a39e38cc0040p-7},
      {0x1.123e3cfa874bep+0, 0x1.c6771fe36bc73p-1},
      {0x1.55529ea286ec7p+1, 0x1.d4587df4afb90p-5},
      {0x1.392f137924892p+0, 0x1.8ec7fe2ee46bep+1},
      {0x1.0af1b6d094829p+1, 0x1.0424d519a9ee5p+2},
      {0x1.872e5c1cf0990p-1, 0x1.d98655c7adeb6p-1},
      {0x1.79fc6fc2c8b5ap-1, 0x1.3c7ab14266778p-3},
      {0x1.2ae8c8225b5eep+2, 0x1.30fcc800c5d5ep-1},
      {0x1.a60f276e29bc4p+1, 0x1.21875edd5c8fcp+2},
      {0x1.2565cc43a2147p+2, 0x1.651e50edead9cp+1},
      {0x1.e10a7cab2172cp+0, 0x1.1cc1332227e7cp+1},
      {0x1.0c0acc344dbb0p+2, 0x1.db99cf5c5da64p+0},
      {0x1.e1a183b413f26p+0, 0x1.5bad77ac9e4ccp+1},
      {0x1.0789ec71b8928p+2, 0x1.f8a27d2935c48p+1},
      {0x1.f57ee38639fe6p+0, 0x1.b3e22e7717766p+0},
      {0x1.4b6b226778082p-2, 0x1.fdc7e1ca43e7bp+1},
      {0x1.751b064ff918bp+1, 0x1.2939b82f82dd3p+1},
      {0x1.339ccb9201352p+2, 0x1.35fd98182f6c1p+2},
      {0x1.1d0b5dfad002ap+2, 0x1.f92d6af65c8f8p-1},
      {0x1.0ff104a396240p-5, 0x1.4b05f1a4abc3dp+1},
      {0x1.ff18af4dd1537p+1, 0x1.3dbdfa4440202p+1},
      {0x1.7e35e23f734e3p+0, 0x1.da23c99b53dc0p+0},
      {0x1.30795ee54d15ap+1, 0x1.22dbbf776bf94p+2},
      {0x1.2ed818d87321ep+1, 0x1.935f9559b7f10p+0},
      {0x1.9fdebf6566dfcp+1, 0x1.96c13e4c75bcap+1},
      {0x1.6741083d98f4bp-1, 0x1.a2673660760edp+1},
      {0x1.9a946d3ed9fc7p+0, 0x1.6902a854dffbfp+1},
      {0x1.254ad6827feb4p+2, 0x1.f2ef149ce6213p+1},
      {0x1.743b3427a8654p-2, 0x1.9686ec18d2e33p+0},
      {0x1.0ff49c501b9dep+2, 0x1.04d1b578ad8e9p+1},
      {0x1.435ed54e0bab8p+1, 0x1.2a46f2dd0a3fbp-1},
      {0x1.d6cdca25ce50fp-1, 0x1.1206b923c77ffp+2},
      {0x1.01c01a08b11fep+2, 0x1.ea7a4226e2038p+1},
      {0x1.baa6e77147f20p-3, 0x1.726d125468050p-4},
      {0x1.575ffbbb67e3ap+1, 0x1.550587ee52599p+1},
      {0x1.6d60722bb4bb1p+1, 0x1.0feff5175377ap-1},
      {0x1.a4a56352660ddp+1, 0x1.3dd29966f7c9fp-1},
      {0x1.cb598e24ba3a0p-2, 0x1.dabb84de7ed97p+1},
      {0x1.f5437b8a9e0bdp+1, 0x1.2c6d744ada8aap+2},
      {0x1.2d265ccf03163p+2, 0x1.cf03a69d70276p+1},
      {0x1.5e0addeadcaebp+1, 0x1.399aa0fbebca0p+0},
      {0x1.73aa6c5ef79f8p+1, 0x1.b8c2a29bd8fb0p+0},
      {0x1.3a6d6995288b4p+0, 0x1.285eb9d4e0adcp+2},
      {0x1.dac08040dd0f6p+1, 0x1.95a971af87fdcp+0},
      {0x1.49e8ac792bb5ap+1, 0x1.7c9cfe6a5ee06p+1},
      {0x1.b7bdf8bdfe45bp+1, 0x1.699cfd43c0083p-1},
      {0x1.84f7c601bf191p+1, 0x1.3a38fe058c091p+2},
      {0x1.106cb8d88fc0cp+2, 0x1.3aa2fff5dbccbp+0},
      {0x1.f50432d4717e2p+1, 0x1.2c564077a29e7p+1},
      {0x1.05183212580a7p+2, 0x1.105b431027d0cp-1},
      {0x1.fa023ab4ca2cap+0, 0x1.5af594d341b1ep+1},
      {0x1.006a722d27790p+2, 0x1.1ddbb0ad760b9p+2},
      {0x1.d62c561adf1e4p+1, 0x1.74bee63470feap-1},
      {0x1.95940c9914cd4p+0, 0x1.2b3507d91afbcp-3},
      {0x1.afe7e13fc21cap+0, 0x1.9bc2aee62df90p+0},
      {0x1.044b3b58c7e2bp+2, 0x1.6818b29c7ee3fp+1},
      {0x1.8d4e5b338f8f7p+0, 0x1.ba28f89501b02p+0},
      {0x1.60bbd50d7458cp+1, 0x1.1c8d3e5012fadp+2},
      {0x1.31bfd79955002p+2, 0x1.3e6bc1a11acd0p-3},
      {0x1.9794bb2b508eap+0, 0x1.de61a13f86e88p+0},
      {0x1.22cfa4334d42ap-1, 0x1.6e9271bb79244p+0},
      {0x1.8ab3749000e03p+0, 0x1.2792255c845bcp-3},
      {0x1.29716576d2540p+1, 0x1.5bb51fe04f710p-2},
      {0x1.8b9a2e29ffbaap+0, 0x1.f20521ecad2dep+1},
      {0x1.47789a6666946p+1, 0x1.6a4d382fea07cp+1},
      {0x1.0a2463c8bdd71p+2, 0x1.2919cb464742ap+2},
      {0x1.8cb0a3959f728p-3, 0x1.c1e0fb7a9ff0cp+1},
      {0x1.a16d391336234p-2, 0x1.8f4309095890dp+1},
      {0x1.938507018245cp-3, 0x1.163c35bd56220p+1},
      {0x1.fc8328532644cp-2, 0x1.8f464cf04c02cp-3},
      {0x1.62613ccb8bf9ep+1, 0x1.3e60ec0e64cb8p+0},
      {0x1.fecfa71fc2affp+1, 0x1.50c59f7558f44p-2},
      {0x1.3357df41223d8p+2, 0x1.5ffb9ddf6ab97p+0},
      {0x1.790a36cfb6091p-1, 0x1.299d49ccd3cf4p+2},
      {0x1.755f96666f333p+1, 0x1.12e1d589336b2p+2},
      {0x1.280a18354daf0p-3, 0x1.249fe11af055ap+2},
      {0x1.f6c2208e0e925p-1, 0x1.0235e50a8491dp+1},
      {0x1.27569bb3efc7dp+2, 0x1.216c5d89ccf62p+2},
      {0x1.0c0cf76a63559p+2, 0x1.a304edacdb671p-1},
      {0x1.077f9115e0456p+1, 0x1.164120d36fdf8p+1},
      {0x1.2cb9b0ba6e2fap+2, 0x1.7dd76f1e8ca44p+0},
      {0x1.6aa7529273698p+1, 0x1.3e81076eec613p+2},
      {0x1.34bcf925a041cp+2, 0x1.37546cffc0796p+1},
      {0x1.c7f447712a334p+0, 0x1.07706c7f93f2cp+1},
      {0x1.7f0de7754c597p+1, 0x1.eb91ade2e846cp+1},
      {0x1.b0b402ba3ef44p+1, 0x1.c11682b208490p-4},
      {0x1.2fb0d1009c33cp+2, 0x1.009b809133278p+2},
      {0x1.f898def2a8096p+0, 0x1.9890ccf04cc10p-5},
      {0x1.8ba9d67aaec72p-2, 0x1.fd68f43013d9cp+0},
      {0x1.04f3e26e5cff0p+2, 0x1.9b0db616a8bf2p+1},
      {0x1.d9673d085fc3fp+0, 0x1.d17088dd763d2p-2},
      {0x1.dcb51a5531bbbp-1, 0x1.012d2d695f092p+2},
      {0x1.13ad656121de0p+2, 0x1.fc4238b401bb2p+1},
      {0x1.15543a51dc280p-4, 0x1.0274c8cb73cb8p+0},
      {0x1.99f550e6c7cc0p+0, 0x1.0c906e37efbdcp+2},
      {0x1.638a94b9c7898p+1, 0x1.8c1546731d6aep+1},
      {0x1.29392f026cf28p+2, 0x1.2e74e750a2e17p+2},
      {0x1.2a5df49f3cdeep-1, 0x1.b1ef726722c73p+1},
      {0x1.0d3a2f71d212dp+2, 0x1.c18ea183be421p-1},
      {0x1.3a93344f40f5dp+1, 0x1.15f7d02532ec4p+2},
      {0x1.99601036e550ap+1, 0x1.6b7c64d4a7d56p-2},
      {0x1.b0911d5dada08p+1, 0x1.7b9fcc55402a2p-1},
      {0x1.dc8dc9a3dec52p+0, 0x1.bb2111d69be13p+1},
      {0x1.d65de0d09d477p+1, 0x1.4e719bcce0b5fp+1},
      {0x1.ce66cd80c6dfcp+1, 0x1.5da8f73caa0c4p-2},
      {0x1.0f7a7145f4254p-2, 0x1.2a49848279c6dp-1},
      {0x1.e86de465470f8p-3, 0x1.99b8fbadb7422p+1},
      {0x1.66051558c1983p+1, 0x1.2d0ec7be2ded6p+2},
      {0x1.8541414a909d1p-1, 0x1.e13401eb35d8cp+1},
      {0x1.20413dbfb57ffp+2, 0x1.2acad9d212d4ap+0},
      {0x1.a2700c5129feap+1, 0x1.01b1186a7ff6fp+2},
      {0x1.5bb19ff44e498p+1, 0x1.c4ad3b1fcda69p-1},
      {0x1.af3e4dc3fe966p-2, 0x1.263fe43cae004p+2},
      {0x1.15480f0de30ffp+2, 0x1.d31cf60981be6p-1},
      {0x1.f92702ecc14fep+1, 0x1.a74cd9e367b95p+1},
      {0x1.2105cfb52f1dep+2, 0x1.317ce0d51135ep+0},
      {0x1.1567279fb625cp+2, 0x1.b85e1372be652p-2},
      {0x1.27f355de829c6p+2, 0x1.22697a77a60eep+0},
      {0x1.f9159d8a22a42p+1, 0x1.1f3efbc4a0991p-1},
      {0x1.03372d4284371p+2, 0x1.901a1ca88e160p+1},
      {0x1.13c4e47276c98p-4, 0x1.af46e53ef85bep-2},
      {0x1.3fb0e5c3c0e5fp+0, 0x1.28f70b49d5899p+2},
      {0x1.9526b40d3c50ep-1, 0x1.ef3501d33fac0p-4},
      {0x1.7716000145193p+1, 0x1.81a6e25a89166p+0},
      {0x1.9c0410fcab897p+1, 0x1.1d81fcefb9b03p+2},
      {0x1.68cc9a4621b08p-2, 0x1.7e760666f69acp-1},
      {0x1.318de7dcde948p-4, 0x1.34dc1611b3574p+2},
      {0x1.598a1d67b5592p+1, 0x1.fec8d58233330p-2},
      {0x1.a1f8a1677aa77p-1, 0x1.99b1cbf716d4fp+1},
      {0x1.93fa3806d5489p+1, 0x1.05086d973084cp+1},
      {0x1.03ab266414507p+0, 0x1.0171d450b5479p+2},
      {0x1.3d8a47510729cp+2, 0x1.0fe4c507ac3e7p+1},
      {0x1.36d374538cf9bp+0, 0x1.25f7bed269d79p+2},
      {0x1.8c9979be1762dp+1, 0x1.0e88f068aaefbp+2},
      {0x1.e577739a4d3dcp+1, 0x1.3bb0718ec1f2ep+0},
      {0x1.28765bc5155b3p+2, 0x1.4e946582597bcp+0},
      {0x1.abc0634e1dc48p+1, 0x1.8ad07c6567f9bp+0},
      {0x1.1eac859ca6778p-3, 0x1.5ad0031114ac2p+1},
      {0x1.5a1fd80dcfea9p+1, 0x1.f1615b105fad8p+1},
      {0x1.cafa10d66ffe6p+1, 0x1.9525110e5aecep+0},
      {0x1.c7a279e020a50p+1, 0x1.20a85c8001193p-1},
      {0x1.790e29a8f89eep-2, 0x1.f5a4c4754150cp-3},
      {0x1.feed73c5d2817p+0, 0x1.c47aac44a8e78p+1},
      {0x1.ce0b903265c23p-1, 0x1.037feeaa2dcdbp+0},
      {0x1.60b2c67032f87p+1, 0x1.039fb23fc0e00p-6},
      {0x1.22ae56be24f68p+2, 0x1.88c90a3c7aac8p-2},
      {0x1.edefac1e0ee0ep+1, 0x1.cef4f30f83e92p-1},
      {0x1.146391e1d28f8p+1, 0x1.28c451341791dp+2},
      {0x1.34cc31e138bfcp-1, 0x1.53154e02598adp-1},
      {0x1.da7599f5a4666p+1, 0x1.d669eb78d95dfp+1},
      {0x1.010ef2675fe2ap+0, 0x1.164db78d3daf5p+0},
      {0x1.3c22ba3c71c2ep+2, 0x1.aefcb7d7ff0e2p+1},
      {0x1.939c01eab7a3ap+1, 0x1.b3a4817924c3cp+0},
      {0x1.20f3e677e685bp+2, 0x1.aa0b1f5c703f6p+1},
      {0x1.4cb458e431f43p+1, 0x1.fedb06ecfea80p+1},
      {0x1.10fa73023ab62p+2, 0x1.2344d8c35610cp+2},
      {0x1.1f81ec45a8da8p+2, 0x1.2642459664bbap+2},
      {0x1.ca118b8d08554p+1, 0x1.c5a40674a229ap+1},
      {0x1.4bce499ec5398p+1, 0x1.f01b3dc5f5dc9p-1},
      {0x1.32513bddf0711p+1, 0x1.75c12a5693fc2p+1},
      {0x1.1a0d734f4c5b6p+1, 0x1.4af041ed92958p-3},
      {0x1.a9f5085092754p-1, 0x1.4df726351af1ap+1},
      {0x1.2325da1bafb6fp+1, 0x1.ad09a3615c3b6p+1},
      {0x1.3927154107483p-1, 0x1.15dc2eb15bc6bp+1},
      {0x1.0eb5ab53593b3p+2, 0x1.83c1042c1ae61p+0},
      {0x1.237095290f3fep+1, 0x1.17d5a2662de50p+1},
      {0x1.74a2994983fb8p-1, 0x1.944f1c4b843f6p+0},
      {0x1.0168fa419b6fep+2, 0x1.89f572be89524p+0},
      {0x1.08d112315e01ep+1, 0x1.cf0d81c10523bp+1},
      {0x1.1c60536755ed0p+2, 0x1.1c0074a55576bp+2},
      {0x1.087912307d2bdp+2, 0x1.21c845c49d4b2p+1},
      {0x1.2a6bf7086a6d8p+0, 0x1.4396cca7109abp+0},
      {0x1.2580b992a47b0p+1, 0x1.5058d86370714p+0},
      {0x1.02c82df5e8428p+1, 0x1.82b46df3cd146p+1},
      {0x1.27dd8cf5314fep+1, 0x1.0fc2693cc8d24p+2},
      {0x1.db7ad6162eb00p-3, 0x1.f86d802b40d40p-2},
      {0x1.3d35a70f1f2f2p+2, 0x1.daeba34453c46p-1},
      {0x1.123e3ca0ef720p+1, 0x1.6c2b32a30e7bdp-1},
      {0x1.301e11408ed6ep+1, 0x1.3f1f6e884aa8dp+2},
      {0x1.258c3ccfe6f63p+2, 0x1.284070728f246p+1},
      {0x1.0167d47268bcap+2, 0x1.35a20d37d4b54p+1},
      {0x1.88543fef0a5d4p-3, 0x1.e995fbfe96949p-1},
      {0x1.e23c95d4819ccp-3, 0x1.0ddb7b67b9f23p+2},
      {0x1.c45ea280168dbp+1, 0x1.6ee04b0d49cc5p+1},
      {0x1.9c74b67887fe0p+1, 0x1.c966339c18660p+1},
      {0x1.afacb6bf5bdc3p+0, 0x1.08d94bb1ddf26p+0},
      {0x1.0503430685614p+2, 0x1.9fd59191441e4p-2},
      {0x1.15473de8d92bep+2, 0x1.2960c42a24856p+2},
      {0x1.0e53ee9524f1bp+2, 0x1.29d2d3e1060b1p+1},
      {0x1.c4d1cdb716e12p+1, 0x1.941e502697700p-1},
      {0x1.12c026e304099p+2, 0x1.5c56588686005p+1},
      {0x1.0f6e815f2ce56p+1, 0x1.2b3a5d9297f11p+1},
      {0x1.f1934abef6cb3p+0, 0x1.603da201d727ap+1},
      {0x1.0a1631236331bp+1, 0x1.373b4e07ad3c6p+2},
      {0x1.e226dc4eddc53p+1, 0x1.332903d5b7729p+1},
      {0x1.26bcc498429fep+2, 0x1.755500c1b3f3cp-3},
      {0x1.41ef103cc9800p-10, 0x1.3287d3c6dc438p-2},
      {0x1.942f02eb4a116p+1, 0x1.d1ef7150df44cp+0},
      {0x1.0cb98da5f274cp+2, 0x1.e81a57cc5b9afp+1},
      {0x1.21032fdf241c2p+2, 0x1.cd46a906185d7p-1},
      {0x1.33458df208170p-3, 0x1.274263030b0bfp+2},
      {0x1.0fe49232002b4p+2, 0x1.33342007088b1p+2},
      {0x1.f7d057d29bf4dp+1, 0x1.9c0ee4fb4da8cp+0},
      {0x1.86df2252cc7abp+1, 0x1.07432b2d87841p+2},
      {0x1.9d8df0a20ccabp+1, 0x1.979120652c4b1p-1},
      {0x1.e12f520935e72p-2, 0x1.3bb8aca31badap+2},
      {0x1.1d7300ef639a6p+2, 0x1.8523b14004489p+0},
      {0x1.7621138c7942ep+0, 0x1.7d0b4d39dac52p+1},
      {0x1.d415afc6ff4f5p+1, 0x1.7eaa4419c7890p+1},
      {0x1.ab2f30a41482ep-2, 0x1.721cf022a084fp+1},
      {0x1.770d0ebef6319p+1, 0x1.13deb9d0987d3p+2},
      {0x1.64d7a1792a008p+1, 0x1.ae727c4d6bc20p+1},
      {0x1.c8f806f774b1ep+1, 0x1.1e967c884f398p-3},
      {0x1.0d77becb39b58p+2, 0x1.8eab8ef407a04p+1},
      {0x1.e98950945639cp+1, 0x1.b1bdae4676949p+1},
      {0x1.b7bcfbfdc896ep-1, 0x1.25e810f006f75p+2},
      {0x1.0b130447d16adp+1, 0x1.ac0800538c17dp-1},
      {0x1.337d16e415aecp+2, 0x1.1a65623d080b9p+0},
      {0x1.145b2d003c158p+2, 0x1.b1c7b1af88e32p+1},
      {0x1.085d525d571cdp+0, 0x1.8d4b30caee5e5p+1},
      {0x1.d38479b89495fp+1, 0x1.1f85d228389bcp+2},
      {0x1.e496a8b74f8e3p+1, 0x1.a28fc8c179a00p+0},
      {0x1.134c022680664p+2, 0x1.8c303c371202cp+1},
      {0x1.42a77fbe29fc1p-1, 0x1.f7ba3b1966c30p-3},
      {0x1.bd8c20b004328p-3, 0x1.0f07284ed5358p-3},
      {0x1.595c7a238dcfap+1, 0x1.03c76fc2703c9p+2},
      {0x1.8d65e50fbbda9p+1, 0x1.082ca5d7bfadap+2},
      {0x1.1003a814c184dp+2, 0x1.18edcb4b55d11p+1},
      {0x1.84d165173dfbdp+1, 0x1.8c2276b40c9bfp+1},
      {0x1.24abff820d4bdp+2, 0x1.1014b102d5586p+2},
      {0x1.0bc3764c5ff23p+2, 0x1.70d178f9e1b94p-2},
      {0x1.b13bf4f7dd857p+1, 0x1.1847e7d91ac82p+1},
      {0x1.06680b8494e16p+0, 0x1.180a6c8f84fe2p+2},
      {0x1.94a8c653cef34p+1, 0x1.1a6122749a624p+1},
      {0x1.95ce0c2f69396p+1, 0x1.19fc0605fc090p+2},
      {0x1.54dc538965d8dp+0, 0x1.c5f5b41ede523p-1},
      {0x1.aa813c1721938p+1, 0x1.f70d4186b3c55p+1},
      {0x1.357608ed0dcfbp+2, 0x1.2942c60259626p+2},
      {0x1.247a5c8614743p+2, 0x1.91bf6c746680ap+1},
      {0x1.15f6b939ce5dap+2, 0x1.dd51fee910a8bp+1},
      {0x1.2302c8d51e554p+1, 0x1.c8a98c3bf41f4p+0},
      {0x1.ea6ffbed42296p+0, 0x1.e28cb73083fd4p+1},
      {0x1.2a74071e1746ap+2, 0x1.c28be5a8b1aa7p+1},
      {0x1.48595dd038235p+1, 0x1.3b74c66140f55p+2},
      {0x1.fd31d34497515p+1, 0x1.0f955489fd2d9p+2},
      {0x1.2951300a7692bp+1, 0x1.2d4e063a6aa11p+2},
      {0x1.45bb679e635bbp+1, 0x1.31377dc9f2937p+2},
      {0x1.ee778ee15cc42p-1, 0x1.9630a69bef276p+1},
      {0x1.aa8ebcad23dbdp+1, 0x1.c8b367ae675a5p-1},
      {0x1.638dd6cc7d331p+1, 0x1.a26551b4b35bcp+1},
      {0x1.99e67d6abb8bfp+1, 0x1.9227de409f1dcp+0},
      {0x1.259cfcae21246p+0, 0x1.142a5ee3c0a71p+2},
      {0x1.45082d284963fp-1, 0x1.18518d0d10b5ap+2},
      {0x1.3e6d9830c4487p+2, 0x1.3d3e327567060p-5},
      {0x1.d1b02128e38dep+1, 0x1.68fb5f731ecbep+1},
      {0x1.10c30e2ba49c8p+1, 0x1.e54c98ef8abd0p+1},
      {0x1.085dc886d1b5cp+1, 0x1.215a9587319cdp+2},
      {0x1.2fe158cd584c9p+1, 0x1.3069530c9d2edp-1},
      {0x1.0ba9e252a9428p+1, 0x1.10d339a43fa97p+2},
      {0x1.0810793a36474p+1, 0x1.ab840a97a94dep+1},
      {0x1.118380981898cp+1, 0x1.3046695345fafp+1},
      {0x1.044ea2e8004afp+2, 0x1.23e536a11b969p+2},
      {0x1.12e3de5b9ca77p+1, 0x1.8bc9d7b75fa36p+1},
      {0x1.84b5a48d00303p-1, 0x1.87fe3db211aaep-1},
      {0x1.0b62af8dbe914p+2, 0x1.2a65785822e9fp+2},
      {0x1.19b8d436dea08p+2, 0x1.245322c2c493dp+2},
      {0x1.2502c90855893p+1, 0x1.3643039b0e526p+2},
      {0x1.8734ee87b6cd2p-2, 0x1.0015332066a35p-1},
      {0x1.d558c4c7db972p+1, 0x1.3e600cadc8cd9p+2},
      {0x1.2dcf04d0b8ef2p+1, 0x1.89d542b9d1e3bp+1},
      {0x1.06c60fe649342p+2, 0x1.e5c3bd012e0a0p+1},
      {0x1.858960330d6fdp-1, 0x1.bb61e8fdb4160p+0},
      {0x1.52231ad2bcb3ep-2, 0x1.c5f3dc8c21e9dp+0},
      {0x1.9f960b9f04812p-2, 0x1.a1460fbad76fcp+1},
      {0x1.9035c757849d7p+0, 0x1.628baa2ce2363p-1},
      {0x1.e66beb1babc7cp+1, 0x1.07337c2e4329ep+2},
      {0x1.f25cbf56e4919p+1, 0x1.3dc0bd73ace24p-1},
      {0x1.1eaef822ea32ap+2, 0x1.896b989823440p+1},
      {0x1.812ef6f75a96bp+0, 0x1.4aa48368a67adp-1},
      {0x1.353502ca7433ep+2, 0x1.759c502275b0ep+0},
      {0x1.66dd342227da8p-2, 0x1.d797dc8f9aa4cp+0},
      {0x1.022af657a372bp+2, 0x1.a5a30d7220c2dp+0},
      {0x1.dcb5ff1350351p+0, 0x1.9d70e7cdbe185p+0},
      {0x1.fba06cb1cc2c2p+1, 0x1.9ab7220ea3845p+1},
      {0x1.5a4eb4e511efbp-1, 0x1.3f2de3fc21a0dp+2},
      {0x1.8321e0cb34256p+1, 0x1.2d023900a1c21p+2},
      {0x1.0c842bb6b1db0p+2, 0x1.29489d5184c80p+2},
      {0x1.338867256e1a6p+0, 0x1.dbcb891b98fc4p+1},
      {0x1.13aba3cf59598p+2, 0x1.d4c156a413d20p-1},
      {0x1.779d9d71d0b55p+1, 0x1.85ce040412da2p+1},
      {0x1.b744456dfb07ep+0, 0x1.c1fab28c1a7dcp-3},
      {0x1.b924365efe1e6p-1, 0x1.930a9945e880ap+0},
      {0x1.c06ab778e5838p-1, 0x1.688e53e0de53ep+1},
      {0x1.48c493ee5939cp+1, 0x1.2416cc789ac92p+2},
      {0x1.baeaed2f5a8c0p-5, 0x1.a565b575d706ep+0},
      {0x1.af8ebab7c69cap+1, 0x1.03a33e6debf21p+1},
      {0x1.0f589af2ef2e5p+2, 0x1.04c4f2c80bf82p+2},
      {0x1.2da760ef5c160p+2, 0x1.cb79ae9d16c5cp+1},
      {0x1.26b879975cc65p-1, 0x1.e2eb423247e9ap+0},
      {0x1.3a89c7294b9c3p+1, 0x1.682e9d088681ap+1},
      {0x1.16cf33152b780p-2, 0x1.80213fdccd0d4p+1},
      {0x1.39cfb6d6e9018p+2, 0x1.37c1c7c99c131p+0},
      {0x1.9081849b96540p-4, 0x1.04f2a82064df2p+0},
      {0x1.8afbb55d35caap+1, 0x1.eb49eac8468f3p+1},
      {0x1.10e6f174679efp+2, 0x1.e3882286074e8p-1},
      {0x1.183bb06874191p+2, 0x1.bcbc0794b2c06p+0},
      {0x1.21dfb3b3dfd03p+2, 0x1.3484203902810p-3},
      {0x1.135e47c6d82bdp+1, 0x1.ecd693d3b3cd7p+0},
      {0x1.83b3bf7d07d4ap+1, 0x1.527cf619649a9p+1},
      {0x1.34d62324de8edp+2, 0x1.75283c28254d0p+1},
      {0x1.95312c49894f3p+1, 0x1.38a1d73cb7ce8p-3},
      {0x1.b8c554cc76b7cp+1, 0x1.b4ebc157a2efap+0},
      {0x1.e5b0b8c223cbap+0, 0x1.17b5c0fdf60c7p+1},
      {0x1.be3fd39fee941p+1, 0x1.19a3e39729dfep-1},
      {0x1.3719f2aca1c5dp+2, 0x1.fad573eafe276p+0},
      {0x1.d4e115d8bea0cp+1, 0x1.18184de29ff45p+0},
      {0x1.267e2707f4ad5p+2, 0x1.e3e4ba1ba2852p+1},
      {0x1.0cf69c3520a34p+2, 0x1.30a4e18e03f9fp+2},
      {0x1.0b0f0036ccd21p+2, 0x1.f122553f474eap+1},
      {0x1.0d71e642e90e3p+2, 0x1.3287ed6d5f36cp+0},
      {0x1.2b18f7420e526p+2, 0x1.5449e763f9a00p+1},
      {0x1.5906bbac2862dp+1, 0x1.0aa093aa562fap+1},
      {0x1.ff6ed7c3ad626p+1, 0x1.410cf04907c70p+1},
      {0x1.f4ed799ef84c5p-1, 0x1.d590c221a407ep-1},
      {0x1.90fec6a0c7360p+1, 0x1.04df06b371218p+2},
      {0x1.70966629676abp+1, 0x1.94a042f9400c0p+0},
      {0x1.3508408d3fff9p+1, 0x1.e736280eb2d2cp+0},
      {0x1.3ec6c1ca198d5p+2, 0x1.890bde682c270p+0},
      {0x1.099dc7aa761d1p+2, 0x1.3bc22a65ffb9ep+2},
      {0x1.d983640b4f4d2p+1, 0x1.0313f942c3a38p+1},
      {0x1.adf3de0ae042cp+1, 0x1.c65d1aa831910p-5},
      {0x1.5cbde8a699686p+0, 0x1.06c2012917db0p-5},
      {0x1.29e4326118b94p-1, 0x1.f8efdce1efbe0p+1},
      {0x1.965586f70bb56p+1, 0x1.3f7d3bcf16904p-3},
      {0x1.a9ef6c380124ep+1, 0x1.6b75621e74588p+0},
      {0x1.064ae358c6400p+2, 0x1.006bd573839dbp-1},
      {0x1.31d0cda3aa1b2p-2, 0x1.0ac09d5b68d97p+2},
      {0x1.2fbf87375aa54p+1, 0x1.3f073a28e2ea5p+2},
      {0x1.a886b714ed552p+1, 0x1.26fd0d680b3c0p-2},
      {0x1.c8ee7986993c4p+1, 0x1.39258cf6168bdp-1},
      {0x1.ca2c3603613e7p+1, 0x1.9f1f7ac3a899cp+1},
      {0x1.922ca9fe9146bp+0, 0x1.1f59bf5208328p-4},
      {0x1.e0022b34ea128p+0, 0x1.f55b2588b2d6ap+0},
      {0x1.3dc3395212e7ep+2, 0x1.b3b76cb4dc522p+1},
      {0x1.55b3048d00e2ep-2, 0x1.6299fc10b57a2p+0},
      {0x1.05fd48d363162p-2, 0x1.1ea1cd11e7640p+0},
      {0x1.38d5935b1d58ap+0, 0x1.bceb2cf6fab9bp+0},
      {0x1.c093207f6c0f2p+1, 0x1.5de29e69ca59bp+1},
      {0x1.0b7fdb5ac0f15p+2, 0x1.2ba78e7a1a98dp+2},
      {0x1.3615c4a1da997p+2, 0x1.79cc4e19179dbp+0},
      {0x1.d8c42b845b8f6p+1, 0x1.bd182c6e5f688p-4},
      {0x1.ed76700d8b653p+1, 0x1.a9a3d39571e70p+1},
      {0x1.abf753070575dp+1, 0x1.9bf1edfe54cc4p-2},
      {0x1.389e163ba1100p+0, 0x1.05ac81cf27656p-1},
      {0x1.02150f9ce23b0p-4, 0x1.119706cda49dfp+2},
      {0x1.5deb02978a49ep+0, 0x1.4e7dfe6cca98ap-2},
      {0x1.f959630315c4cp-2, 0x1.b831db725ee4bp+1},
      {0x1.0dc6860bab981p+1, 0x1.f17b21c65c349p+1},
      {0x1.3d61bb102ab64p+2, 0x1.120a5bbecd882p+1},
      {0x1.1840f6162ce7dp+0, 0x1.3ecf0ac8d9d69p+1},
      {0x1.0c0b9e4a5256cp+1, 0x1.15301bf46be81p+1},
      {0x1.89da5dfde0286p+1, 0x1.e0f221e041e70p-4},
      {0x1.d9305684d1ddep+1, 0x1.d89b776cd7378p+0},
      {0x1.6ca0777b10ddcp-2, 0x1.988d41a80bed2p+0},
      {0x1.6a4ba9fa32685p-1, 0x1.93511d8f670a2p+1},
      {0x1.8764d40a2a304p+0, 0x1.2f0db491f4a96p+0},
      {0x1.b52ba79c82ad9p+1, 0x1.09a008dfcefb7p-1},
      {0x1.710591019ae98p+1, 0x1.07a6b0e07a58cp+2},
      {0x1.604be932230c6p+1, 0x1.bcee56909d388p+1},
      {0x1.55abc6f71066fp-1, 0x1.73df2607e7d51p+1},
      {0x1.0239e5ad14429p+2, 0x1.0e140bcfcdd5fp+2},
      {0x1.1759b8ae908e4p+1, 0x1.42592f9be64a8p+1},
      {0x1.45059dfae275fp+1, 0x1.01a5d5fb68b9cp+0},
      {0x1.1608ae90ac158p-4, 0x1.034a66b9578ddp+1},
      {0x1.b73cea0dc0c91p-1, 0x1.d1dfe167770b5p+1},
      {0x1.9616f2192314cp+0, 0x1.fbe8f7892e9aap+1},
      {0x1.fe4a90d9f63c2p+1, 0x1.a971c1b5bb727p-1},
      {0x1.0803a5c12eacbp+2, 0x1.6ccbc751aabeep+1},
      {0x1.cc034845f01a9p+1, 0x1.1c2832095f263p+2},
      {0x1.bb3972277af4bp-1, 0x1.72e508cb350c0p+1},
      {0x1.242d23f640172p+0, 0x1.8ee5000638932p+0},
      {0x1.0cec5f222f625p+2, 0x1.c854c4af3966fp-1},
      {0x1.d716126aa3960p+0, 0x1.d62125fbcfed6p+1},
      {0x1.e20a6dcd817bap+1, 0x1.c4993993b4763p-1},
      {0x1.2c0041b3f081ep+2, 0x1.3e5d44906a0d8p-1},
      {0x1.50f4315cb9b62p+1, 0x1.06a23e95a3c30p+0},
      {0x1.cb5e3b906e3fbp+0, 0x1.3a9e9e9227abdp+2},
      {0x1.0fe57372f2c26p+1, 0x1.7a8c6de5288a6p+0},
      {0x1.67dc1e5c8bb04p-1, 0x1.2b244b067fe93p+2},
      {0x1.204d315bd689fp+1, 0x1.17ecccf897f74p+2},
      {0x1.9fd45e8dbd564p+1, 0x1.097eeb26b6f5ep-2},
      {0x1.72a79c927f8fbp+0, 0x1.0c7a2d51e2b2fp+2},
      {0x1.c6722a035f828p+1, 0x1.6950a94d0b80cp+1},
      {0x1.af0930ee2c5bfp+1, 0x1.a593d5c4298e1p+1},
      {0x1.5e383d7e7b246p+1, 0x1.0db68cfbdf32cp+1},
      {0x1.af8b2a6306b2cp+1, 0x1.17a7044164e3fp+2},
      {0x1.d45fa2d76dafbp+0, 0x1.3905ebe2374a2p-2},
      {0x1.5c28bc1932c9cp+1, 0x1.e3447bd042344p+1},
      {0x1.8ec42327d2fb8p+1, 0x1.2d5e9dd950d42p+1},
      {0x1.71eb51d187910p+1, 0x1.0e277ee6dad69p+2},
      {0x1.3a739fcb75223p+2, 0x1.c2661dfd4a44cp+1},
      {0x1.098db0bed0b22p+2, 0x1.3b431cd0325e4p+1},
      {0x1.67b5a4ecb35cep-1, 0x1.222f0ceabce62p+2},
      {0x1.aa49913c59310p+0, 0x1.a65dc6c484fffp+1},
      {0x1.e831ffbc1d170p+1, 0x1.c4333cca50a8ap+1},
      {0x1.611ef7552cb09p+1, 0x1.21de5368b4854p+2},
      {0x1.24b33b63343b8p+1, 0x1.cd0c84941aaf4p+1},
      {0x1.04017655c1748p+1, 0x1.32de78d9f85ddp+2},
      {0x1.a0b0c739329e0p+1, 0x1.dd5ce1798fea0p+1},
      {0x1.a608e19027412p-1, 0x1.076127eb4060cp+2},
      {0x1.3c3416f9f60f2p+2, 0x1.6656e3599ea34p-1},
      {0x1.bef906aec955fp+1, 0x1.10d9eaa905e86p+1},
      {0x1.d4868a850cd79p+1, 0x1.3bcd50eb6629cp-1},
      {0x1.3f75a8d66e1a6p+1, 0x1.2c32ce344abacp-3},
      {0x1.48e0304494437p+1, 0x1.4aef70ebc9246p+1},
      {0x1.91708fc3365a0p-2, 0x1.863722f877f28p+1},
      {0x1.c4c44ef47ed3dp+1, 0x1.16cad58625165p+1},
      {0x1.d83269254079bp+1, 0x1.5f763a8d8fc11p+1},
      {0x1.59f059c04832cp-3, 0x1.b329fc3452de8p+0},
      {0x1.a750ba9f1c1cep+0, 0x1.c89ffa1fcaee6p+1},
      {0x1.5201c1efdb402p+1, 0x1.afb1fe03ce7dep-2},
      {0x1.0b7c22241a00ep+2, 0x1.b8a7f213a1f3dp-1},
      {0x1.4cc0422877079p+0, 0x1.121534d68eb36p+2},
      {0x1.e1b46f853da1cp+1, 0x1.b9076d2aeef44p-1},
      {0x1.043a6389fc4acp+1, 0x1.3c3b3dc7c0430p+1},
      {0x1.8f3703adb31c3p-1, 0x1.7032b560c9d7ep-1},
      {0x1.8a739ea731e28p+1, 0x1.61c6bd7524d77p+1},
      {0x1.902d70a29d52cp-2, 0x1.b4a8241a82a06p+1},
      {0x1.99eb3af4eb97ap+1, 0x1.36069db215865p+1},
      {0x1.0d4fb145c99e4p+1, 0x1.dd9a312df4669p+1},
      {0x1.75b7bc4c1fd06p-1, 0x1.2fcdddf92756dp+2},
      {0x1.0fc52272ef06dp+2, 0x1.03ece3d3d28dap+2},
      {0x1.1500e2c7483b1p+2, 0x1.3c32e666d7d21p+1},
      {0x1.852335687cec4p-1, 0x1.6b45d978cdd8ap+1},
      {0x1.9537f152cb7a8p+1, 0x1.39037d12789c0p+1},
      {0x1.1af5f4c565129p+1, 0x1.3172e64243ce5p+2},
      {0x1.88165bc6591b6p+1, 0x1.2d85d3270ff3ep+1},
      {0x1.67ff700d264a9p+1, 0x1.0d0b7ab444a23p+0},
      {0x1.346b1c802b3c1p-1, 0x1.834c12ff0927bp-1},
      {0x1.59eeed9667400p+0, 0x1.406b477f90727p-1},
      {0x1.bb2936904bddbp+1, 0x1.340d499ffe13bp+2},
      {0x1.8d5002af1d87dp+1, 0x1.dd86ed1523540p+1},
      {0x1.058389926795dp+1, 0x1.5efd71804ebf8p+1},
      {0x1.e514f83292f80p+1, 0x1.9d05b95bbf706p+1},
      {0x1.cae0fcac28590p-2, 0x1.51ce4fa400aa4p-1},
      {0x1.aef641fd60b66p+0, 0x1.05a65a26f89acp+2},
      {0x1.a3485748aaa4bp+1, 0x1.9a4dc4adc00dfp+1},
      {0x1.2373d6483197ep+2, 0x1.bab7dff50ca55p+0},
      {0x1.0927d17005d50p+2, 0x1.0bee345d759dep+2},
      {0x1.b45a93b1b101dp+1, 0x1.21096a3cdbc95p+1},
      {0x1.f2ea6165e6bd6p-2, 0x1.1a62f5fa023e0p+2},
      {0x1.e42a493892b99p-1, 0x1.dff767975530cp+0},
      {0x1.8e6487b69bec9p+0, 0x1.d398d0f8dfb60p-3},
      {0x1.034e9222ed4a7p+0, 0x1.320a66af57ec6p+2},
      {0x1.fde9ce8606c15p+1, 0x1.35eb1949d1945p+2},
      {0x1.1300bb22880c6p-1, 0x1.2f2988be13343p+2},
      {0x1.45787cb06cfbbp-1, 0x1.555c031e80f10p-2},
      {0x1.26ac828f2f44ap+2, 0x1.c691760e8d72ap+1},
      {0x1.4b7ebcb2fe77ep+1, 0x1.22dd26c8ef9e2p+0},
      {0x1.ead0717cb4b63p+0, 0x1.2a33cc59e410ap+2},
      {0x1.c75674ae2e08ap-1, 0x1.e2e3872934995p-1},
      {0x1.3bedf71c7f648p+1, 0x1.bf17fe00f047bp+1},
      {0x1.079f7b320848fp+1, 0x1.e173407fc158cp-2},
      {0x1.201b44d5099f5p+2, 0x1.d5906809006e8p+1},
      {0x1.683b90f340078p-1, 0x1.7de18ec047b60p+0},
      {0x1.4eb16e1cd5a7ap+1, 0x1.af130ebe12148p+1},
      {0x1.a97001950c01cp+1, 0x1.3e9945e8b6b94p+2},
      {0x1.c141f6ff192f0p+0, 0x1.de707e1aae1f2p+1},
      {0x1.3c09df3b8c4c8p+2, 0x1.ac1401e20c328p+0},
      {0x1.edf8505745d63p+1, 0x1.52f6b93de9534p-2},
      {0x1.957011f9d14c3p+1, 0x1.cc149ff42312ap+1},
      {0x1.90d70cfc7fdb5p+1, 0x1.3622c32a4a59ap+1},
      {0x1.595f3566da674p-2, 0x1.26f1d52748d9fp+2},
      {0x1.0208e3ba84ab0p+0, 0x1.83de45211c4c2p+0},
      {0x1.37193c9c38e7fp+2, 0x1.092239ac77298p+2},
      {0x1.37effda07d27ap+2, 0x1.053314fabb23bp+0},
      {0x1.3e31c86c76b0ap+2, 0x1.21d579648ed8ap+1},
      {0x1.ab3975dc8ff74p-1, 0x1.ec99c66ab196dp+1},
      {0x1.cc34b50a64df5p+1, 0x1.4d4bfdf4082b4p-2},
      {0x1.19e9220fb035ap+2, 0x1.34edc67d12369p+2},
      {0x1.b5a9ed9de87bcp+0, 0x1.9606e191e5aa4p+1},
      {0x1.27b731f8bbd4cp+2, 0x1.2210a7c7529d8p+2},
      {0x1.8b6709c4a3e96p+0, 0x1.225285025eadap+2},
      {0x1.317655854e1fap+2, 0x1.04f77c5292f94p+2},
      {0x1.647cdf9277c3cp+1, 0x1.f18ad8112b3e0p+0},
      {0x1.48e97cdb4d042p+1, 0x1.0d93c05111c6fp+2},
      {0x1.a0ad4d6c08d96p+1, 0x1.16c602a736dbap+2},
      {0x1.44a52201f0fd6p+0, 0x1.b825db5945bbep+1},
      {0x1.c5243bd5cfa80p+1, 0x1.a0f7248cf551fp+1},
      {0x1.05898ba4e8bf5p+1, 0x1.1833f92d53cafp+2},
      {0x1.da45788df15dap+1, 0x1.75ae361d906acp+1},
      {0x1.08788a456724ap+0, 0x1.df1632bb9e644p-2},
      {0x1.38fc66313cf5dp+2, 0x1.251c10af32ccap+1},
      {0x1.ee1b1cd9ffde3p+1, 0x1.251a0a88d98a4p+1},
      {0x1.23927d99bda76p+0, 0x1.069b0f5a76778p+1},
      {0x1.6d8ab547b4f42p+1, 0x1.09da1fbae456cp+2},
      {0x1.a50146bf16112p+1, 0x1.987d8f0fb7ee0p+0},
      {0x1.f6e22d6ac1220p+1, 0x1.4e57726f6b944p+0},
      {0x1.38bc12e5acb91p+2, 0x1.213839781d102p+1},
      {0x1.3c3c243463e7ep+2, 0x1.3f142cbf6971fp+2},
      {0x1.dbec53803dde5p+0, 0x1.ff01ae3587ef2p-2},
      {0x1.f91ab21c41468p-2, 0x1.1229b8c800863p+1},
      {0x1.543e2db802a96p+0, 0x1.1f4096ef40435p+2},
      {0x1.1902837f8ac98p+2, 0x1.7cd22e6474966p+1},
      {0x1.9297de163bf96p+1, 0x1.0d5840c7cfc88p-1},
      {0x1.41a1e3ce80d30p+1, 0x1.001ff37c097dfp+2},
      {0x1.0b861a54c4192p+1, 0x1.3b63ed4bf7bd2p+1},
      {0x1.64262db7c3aa3p+0, 0x1.33c7660f188fbp+2},
      {0x1.5e12df6a7a735p+1, 0x1.262103c4786c8p+0},
      {0x1.d4a59d5629248p+1, 0x1.61d3a14e99a3fp+1},
      {0x1.4a99c5524070ap+1, 0x1.794f0f761d4c1p+0},
      {0x1.e6cba334207a7p+0, 0x1.08e6fc309cae2p+1},
      {0x1.16fbcd41a89a0p+1, 0x1.3c59fa82a8194p+0},
      {0x1.8b04d544c2c68p-2, 0x1.3ee57a80ed34ep-1},
      {0x1.1ed9e2c826c2cp+2, 0x1.5271d6a6d6f02p+0},
      {0x1.0145e82fe53e9p+0, 0x1.e9fd691c24ae0p-2},
      {0x1.132fbf26b238ap-1, 0x1.6d4bd0a14dff2p+0},
      {0x1.1c6eef7d79d3cp+2, 0x1.fd021c75d7e83p+1},
      {0x1.31c6428be6bbep+1, 0x1.beae34bf2d831p+0},
      {0x1.813bf29c5e060p+1, 0x1.1e0e67455b9a2p+1},
      {0x1.4958652c1b554p+1, 0x1.38788d8806495p+2},
      {0x1.32fa9af97310bp+1, 0x1.39743745c21f4p+2},
      {0x1.2cf32a524f9acp+2, 0x1.db223250365fep+1},
      {0x1.4ed303cd89ba4p-3, 0x1.1228d9e8f3156p+2},
      {0x1.0142454c4d770p+1, 0x1.3eaae8891225ep+1},
      {0x1.2ca92bc4b241ap+2, 0x1.42ebc3f81ecd5p-1},
      {0x1.b38954c2e9615p+0, 0x1.8a4cffc719edcp+1},
      {0x1.28cdad094b2d2p+2, 0x1.1edb4031a69a4p+2},
      {0x1.a0ae1c4c6d40ap+0, 0x1.ed4f0586cae78p+1},
      {0x1.40036e13b3a74p+1, 0x1.2e1fc3ee37bf8p+1},
      {0x1.2a4e6bc7115dep+2, 0x1.61772db740579p-1},
      {0x1.a7a95fb93a3bep+0, 0x1.92ddfd169612dp+1},
      {0x1.021ec1b6dc948p+1, 0x1.31f8ae43d6d41p+2},
      {0x1.00ddb2efd3f38p+2, 0x1.8543b94da9fa0p+1},
      {0x1.9930f242e8f44p-2, 0x1.35c8c1ddb0954p+0},
      {0x1.e392ce4d8ad84p+0, 0x1.1170bf9241c79p-1},
      {0x1.19349fa5d1613p+2, 0x1.28069dcd633eap+2},
      {0x1.0e42cf08b5fe6p+2, 0x1.c1d2ad2a91402p-2},
      {0x1.d549aa1dda25ep+1, 0x1.8ee72db6641f3p+0},
      {0x1.165b6a96d71f4p-1, 0x1.3ac26b63e372ep+2},
      {0x1.44ca5d3fa0179p+1, 0x1.e9de900fd2eb0p-5},
      {0x1.7408616fe58d2p-1, 0x1.00179338e1942p+0},
      {0x1.3b47b73b7729cp+1, 0x1.2389fee8100f8p+0},
      {0x1.d4942c6a72ec6p+0, 0x1.ac579c1a29485p+0},
      {0x1.f3e9e813a1a23p+1, 0x1.42c321046fdedp+0},
      {0x1.ccdd02a1fa484p+0, 0x1.09e9960ed69a5p+2},
      {0x1.fde53e97a16d2p+1, 0x1.fbe32156cece0p+1},
      {0x1.0cb47d73a0708p+0, 0x1.02b2c467595a3p+2},
      {0x1.9f0039fcec748p+1, 0x1.62d00237f650fp+1},
      {0x1.05cb659ddcd79p+2, 0x1.80b57b3607c4ep+1},
      {0x1.8a51a522be348p+1, 0x1.987e07b19c624p+1},
      {0x1.40fbf5774dd60p+1, 0x1.1ef7266c569d2p+2},
      {0x1.32ec55bd81476p+2, 0x1.670bfcc8c2acep+1},
      {0x1.4b13a6bbb926ep+1, 0x1.37bac44aaa577p+2},
      {0x1.3821ad4aaf9ffp+1, 0x1.5a4f45a7a1c29p+0},
      {0x1.2a8c501dc18fcp-1, 0x1.6404286565288p-1},
      {0x1.8088b9aa6a84bp+1, 0x1.353629d68c3f3p+1},
      {0x1.a8d9172c87ef3p-1, 0x1.18233897e6ecbp+2},
      {0x1.01920fe94389cp+0, 0x1.bd2a6aafa21e4p+1},
      {0x1.b7e575db9fe08p+1, 0x1.c82812d6f7050p-3},
      {0x1.00223d5a043acp-3, 0x1.fca21201a4bf6p-2},
      {0x1.01675e80ab134p+2, 0x1.4075b9cd768ddp+1},
      {0x1.366c345c94adfp+2, 0x1.864de68d065e4p+1},
      {0x1.122d81c08dfe5p+1, 0x1.6d900e4f5bb79p-1},
      {0x1.1eccbf587d723p+2, 0x1.1837401dac87cp+0},
      {0x1.07536f6ca5879p+2, 0x1.1d463203e3738p+0},
      {0x1.e204b990a587bp+1, 0x1.060e81488fe08p+1},
      {0x1.acca20cf50856p+1, 0x1.55973d619abcdp+0},
      {0x1.7a77591d54790p-1, 0x1.333c82582231dp+2},
      {0x1.c5e9fe42af05ep+1, 0x1.1908f3a2f69e6p+1},
      {0x1.25f0cd3719356p+0, 0x1.c4db56d46b9b5p+1},
      {0x1.21ae15bf20e72p+1, 0x1.2e529343ce93ap+2},
      {0x1.dcc5a140151a8p+1, 0x1.3319712323dedp+0},
      {0x1.cda058b5a12bbp+1, 0x1.3c13cfd746d48p+2},
      {0x1.2f7c2fee519a0p+2, 0x1.a34f02c2d1930p+0},
      {0x1.79bd8578a25e0p-6, 0x1.0208d6b1a87b8p+2},
      {0x1.8005a7c5f709ap+1, 0x1.b687950d35eeap+1},
      {0x1.f462e6a6776cap+1, 0x1.9a88e76ec8632p+0},
      {0x1.c179cad31731ap+0, 0x1.6d28e981253d0p-3},
      {0x1.40d3d247804c3p+1, 0x1.0e75028021434p+2},
      {0x1.3ba70265191cap+2, 0x1.08fdef912f257p+2},
      {0x1.3719d61fc0430p+1, 0x1.6c4119506e2b8p-2},
      {0x1.70cdebb1fd191p+1, 0x1.1ee5e157ebedfp+1},
      {0x1.0955e3a000b7fp+0, 0x1.005a583150b2ap+1},
      {0x1.284e739cd66bdp+2, 0x1.85e8634711d5ep+0},
      {0x1.ac2cacaaa4386p-2, 0x1.3d985252a0cb4p+2},
      {0x1.8a0680734bc6fp+1, 0x1.77afb58ec37eep+1},
      {0x1.d50ad6888749ep+1, 0x1.cdb74b4943d94p-1},
      {0x1.13173e274c096p-1, 0x1.78041a1353eb4p+0},
      {0x1.2d916c1669016p+0, 0x1.e8942ddfd5736p+0},
      {0x1.fd31f834ba91fp+1, 0x1.75c27211710eap-2},
      {0x1.e5f11c4fb28cdp+1, 0x1.22204b837e1f8p+0},
      {0x1.2f023bd043543p+2, 0x1.cfacb1e8675c8p+1},
      {0x1.784771bc08cb5p+1, 0x1.e24c8032e2350p-3},
      {0x1.3451d2fb59fc2p+2, 0x1.91ef792942942p+1},
      {0x1.cf353aa5b70f8p-1, 0x1.af3a888368888p+1},
      {0x1.30c83717c10f9p+1, 0x1.ced4d2d435600p-9},
      {0x1.538d59ad91608p+1, 0x1.2868e4da60d6cp+2},
      {0x1.a8339678b8e96p+1, 0x1.e45e7f8c62ca0p-4},
      {0x1.d31e70eb4f493p+1, 0x1.13216f246190ep+1},
      {0x1.ce45122ef5550p-5, 0x1.26f670a3297b6p+0},
      {0x1.7dfbd54a97b4ap-2, 0x1.0a75d75d1ea9fp-1},
      {0x1.7da9f9a764eddp+1, 0x1.3521327a60ae8p+1},
      {0x1.05661706f622ep+2, 0x1.bddbbf4963126p+1},
      {0x1.135a31879a3fap+1, 0x1.184a18bf9da48p+0},
      {0x1.8c7450ac009fdp+1, 0x1.e6bfc007ca278p+1},
      {0x1.38f0d61f4955ep+2, 0x1.2e662f9122419p+2},
      {0x1.4a0992660f08ap+0, 0x1.443a871a18da2p+0},
      {0x1.34d76a0b7ebdbp+2, 0x1.83abede0162c5p+0},
      {0x1.06453334dd717p+2, 0x1.0b1dadac58a37p+2},
      {0x1.f31dfc83fabc6p-1, 0x1.64f458faa6fc0p+1},
      {0x1.315ccc4b9d0a9p+2, 0x1.0ff44a9b25eccp+1},
      {0x1.c6b579dd32a7bp+0, 0x1.257e18983c2bcp+2},
      {0x1.1371eed85a8b4p+2, 0x1.161c0ff81f959p+2},
      {0x1.8ff3865703db0p-2, 0x1.cbf7b0137aeadp+0},
      {0x1.0ad28494bef8ep+2, 0x1.d25c3a71d4ce8p+1},
      {0x1.5511f1e65f6e1p+0, 0x1.7704af44e3c18p+1},
      {0x1.966e37bb745a4p+1, 0x1.07a9b52001ff6p+1},
      {0x1.266f5a0706efcp+2, 0x1.e9bd14193fc11p-1},
      {0x1.19abcc95cb14ep+1, 0x1.f6afc318056c7p+1},
      {0x1.2cedccb394060p+2, 0x1.3df9a8c2a6ad0p+0},
      {0x1.5ca7d5a6e7e33p+1, 0x1.ba771d7fa6db0p+0},
      {0x1.c1753519efe08p+1, 0x1.400257959b188p-3},
      {0x1.50bf062aa84b4p+0, 0x1.338b52756e34cp+2},
      {0x1.e3f2e1c5e5e8dp+1, 0x1.7e0f45ca39f4bp+1},
      {0x1.854efbb09f5cap+0, 0x1.000967b2f74f4p+2},
      {0x1.1d114aab411e7p+2, 0x1.53a1717045cc4p+0},
      {0x1.bce1d42e1e459p+1, 0x1.35e4678c9dc9dp+1},
      {0x1.277752c0a55fdp+1, 0x1.23c513230ec7ep+2},
      {0x1.9c7d2cb4c2a95p+1, 0x1.9a57b5f719084p+0},
      {0x1.a21f07ebff7fcp-2, 0x1.1e4482c20b7e5p+1},
      {0x1.ea774dc90b200p-3, 0x1.00785fdd47d1dp-1},
      {0x1.13bddd7d59906p+2, 0x1.2dd7a56f25e34p+2},
      {0x1.8ada14aa1fed0p-3, 0x1.17fda8fa06275p-1},
      {0x1.0b4d01f290b99p-1, 0x1.86646c8747795p+1},
      {0x1.89fa04e25b054p+0, 0x1.3d750b5562e9ep+2},
      {0x1.1a6af5c6171bep+2, 0x1.b3b821525cafep+1},
      {0x1.0e31ebc2f422bp+2, 0x1.5e020b4a6d2d2p+0},
      {0x1.800a90ef42115p+0, 0x1.39fee1aed3355p-1},
      {0x1.4d5d6e3cfda36p+1, 0x1.e4d126e3ed8b4p+1},
      {0x1.1773de2bbb3f7p+2, 0x1.1e087b23e9655p+2},
      {0x1.040c8af9efe0ep+2, 0x1.30b6fe6daa04cp-1},
      {0x1.950d1ce88626fp-1, 0x1.a97aac5147e1fp+1},
      {0x1.2b45e29549080p+1, 0x1.adfff0d98e5a2p-1},
      {0x1.790866894152ep-1, 0x1.1052e08a04b2cp-2},
      {0x1.16c87e15ee217p+2, 0x1.384971173da27p+2},
      {0x1.9af056aed3feap-1, 0x1.1c13175423480p+2},
      {0x1.88c54cfac2600p-7, 0x1.90ce61928b819p+1},
      {0x1.13c386f3bbf00p+2, 0x1.3755bc2e96c60p+0},
      {0x1.341c8d32fbc0cp+1, 0x1.e192518464334p-3},
      {0x1.34576b391cbf1p+2, 0x1.0fbdb924bef1dp+1},
      {0x1.96dfe8cbd8951p+0, 0x1.b4f4c2a427eccp-1},
      {0x1.e9a3483b16f58p+1, 0x1.b23b036219811p+1},
      {0x1.f9e68874268c9p+1, 0x1.86d78fecf6334p+1},
      {0x1.134cf16f0b875p+2, 0x1.b3747f8abfb07p-1},
      {0x1.e92c066d6e5e3p-1, 0x1.e3e57c5dd31d8p+0},
      {0x1.36f5cf8c03579p+2, 0x1.33276b5573c48p+1},
      {0x1.a81a106a79dccp-2, 0x1.01f6d9076e2cep+2},
      {0x1.285ce55563974p+2, 0x1.e0b59095b52eap+1},
      {0x1.3f0905ec0c95ep+2, 0x1.202bb81f36b6ap+1},
      {0x1.e7c6855849cb3p-1, 0x1.30652bdb2eaa2p+0},
      {0x1.0627349d03811p+2, 0x1.6c15c7a53aa76p-1},
      {0x1.05fd13d005a20p+1, 0x1.6ec2881830886p+0},
      {0x1.3626656c94ac7p+2, 0x1.bf7c4200b70cdp+0},
      {0x1.63d1293c8da16p+1, 0x1.f7276a1b67750p-5},
      {0x1.4ba7d15b8a931p+1, 0x1.32ece6d1dd08cp+2},
      {0x1.ed31061db0219p-1, 0x1.94998d6ff050bp+1},
      {0x1.a97f1a65e7754p+1, 0x1.4b8ebbf0e1372p+1},
      {0x1.9f1e821ec61c6p+0, 0x1.5463e2ced56aap-2},
      {0x1.b52362fd6a8f7p+1, 0x1.a325450c38174p-2},
      {0x1.87ffc752c32e1p+1, 0x1.3dd8aa72935edp+2},
      {0x1.6039b0cc2ade4p+1, 0x1.ce05e86e2aaf3p+1},
      {0x1.774c35fe0e788p+0, 0x1.9200b95aeb99fp+1},
      {0x1.8d8faa9d23837p+1, 0x1.23b28bda64d41p+2},
      {0x1.a7c2837296288p-2, 0x1.dff4715dbe696p+1},
      {0x1.1d899a76d7556p+2, 0x1.9972f5cba661fp+1},
      {0x1.945f045d47c7cp+0, 0x1.462b2c94a7eb3p+1},
      {0x1.152c6d58cc6bep+0, 0x1.196c9f73e31eap+1},
      {0x1.3d127a61bdd8ap+2, 0x1.9ac680c0f526fp+1},
      {0x1.35af3fa4292e7p+1, 0x1.39d1a9df378adp+2},
      {0x1.830abca2f3280p-5, 0x1.27e9b210a88c5p+1},
      {0x1.2b80115fc4672p+0, 0x1.f0cd798339b67p+1},
      {0x1.3da08fa6a8029p+2, 0x1.2da3c61c3f248p+1},
      {0x1.7bbff4d1adeebp+1, 0x1.0831faa0a8cfcp-1},
      {0x1.55426b3635cf2p+1, 0x1.c7740ce60c9e6p+1},
      {0x1.0c1d5ea793818p+1, 0x1.a11d9d8b58bbdp+0},
      {0x1.f2bb6fa1108e6p+1, 0x1.034d7572f55d5p+0},
      {0x1.08e78e47311f1p+1, 0x1.47f75b9140268p+1},
      {0x1.695794119c504p+0, 0x1.33b39bf9dc0c6p+2},
      {0x1.0c14230b0604ep+2, 0x1.a61be13116640p-6},
      {0x1.46f8eca91d2f8p+0, 0x1.0531e4aee230cp+2},
      {0x1.c3d95d1de54f2p+0, 0x1.4170d27cec7aap-2},
      {0x1.d0342a78f739cp+1, 0x1.a166b74115b44p+1},
      {0x1.ee6354ef59907p+1, 0x1.3f5eed0b6369ap+1},
      {0x1.2594571cb1db0p+1, 0x1.41a296fdbd7efp+1},
      {0x1.8221fcab62b35p+1, 0x1.2afbea51b21f2p+1},
      {0x1.96c4b6d9dc068p-2, 0x1.be0a49dc209e6p-2},
      {0x1.0194a5c3b7b7ep-1, 0x1.0309072e67443p+2},
      {0x1.73518c0e7fc96p+1, 0x1.debb5cb39c918p+0},
      {0x1.1003d32fb623ep+1, 0x1.8d78290afad13p-1},
      {0x1.679cc2d0cf609p+1, 0x1.7b2d8176ff23fp+1},
      {0x1.c50024f179ff3p+1, 0x1.e44c413e43f0cp+1},
      {0x1.0693854b16dc6p-2, 0x1.69c2408e91d06p+1},
      {0x1.56b477d2a4465p-1, 0x1.2552d218c1b40p+2},
      {0x1.74cbe29d4b597p+1, 0x1.b4e4855f37d91p+0},
      {0x1.3e320452aca31p-1, 0x1.ea3dbebea0952p+0},
      {0x1.23a8412155820p+2, 0x1.277b005381e5bp-1},
      {0x1.23a02be23a7d3p+2, 0x1.14c418c91178fp+2},
      {0x1.fb54728fe36acp+1, 0x1.af840b056edd2p+0},
      {0x1.4d764deb08d26p+1, 0x1.cb0b2d2846282p+1},
      {0x1.2e3ecd75897c4p+1, 0x1.c58eb886d8e11p+0},
      {0x1.2db22bc455e81p+2, 0x1.a712d19e80dabp+1},
      {0x1.8c3033125caf5p+0, 0x1.220e4ffe95cdap+2},
      {0x1.d2aef29195e20p+1, 0x1.3ec4a4ce9644ep+2},
      {0x1.1b6d5b2d8c5acp+0, 0x1.1bd31fca70420p-4},
      {0x1.259134041941bp+0, 0x1.60bd74380ec65p-1},
      {0x1.95f47b6200258p+0, 0x1.065357f880092p+1},
      {0x1.11c93370b92f8p+2, 0x1.2f5d4de8bd100p-6},
      {0x1.2559b3fb78b93p+1, 0x1.ea41960494ca6p-1},
      {0x1.d45ba12423db4p+1, 0x1.7be0fc80a24a6p-1},
      {0x1.deec24fe5fe47p+1, 0x1.ca34adb561108p+0},
      {0x1.2926b8e6f3e66p+2, 0x1.50d7b41b906abp+1},
      {0x1.231fe78fde22ap+0, 0x1.19a59e128fa7ep+2},
      {0x1.fbc2ceab4ecfcp-3, 0x1.1f46167a87accp+2},
      {0x1.c910fbcb6de3ap+1, 0x1.b7e5f6cb67a66p+1},
      {0x1.ac5c85c343c76p-1, 0x1.36462468786eap-1},
      {0x1.50f19d351e878p-1, 0x1.9daf081769bd2p-1},
      {0x1.59bbdd8170bf8p+0, 0x1.8db990455c715p-1},
      {0x1.60f66a31eaadfp+0, 0x1.f045668ad8f40p-1},
      {0x1.2f2ff66070b84p+2, 0x1.3b2308ba34d10p-3},
      {0x1.2bd5c70436076p+2, 0x1.26936abb571c7p+2},
      {0x1.1301bd4769e90p+1, 0x1.91e8e46e5ebdbp+1},
      {0x1.124a4c773795dp+0, 0x1.bf3132767d724p+1},
      {0x1.304bd498044e2p+2, 0x1.c512ac93c472fp+1},
      {0x1.3de8553e91720p-1, 0x1.eff34db69136ep-2},
      {0x1.3bb140a4f1c99p+1, 0x1.671db491a0c4fp+1},
      {0x1.fce78348365d6p-1, 0x1.2195ed4437b0fp+1},
      {0x1.20aa691325795p+0, 0x1.8d1e23779b4fcp+1},
      {0x1.b9c08d55ea1a8p+0, 0x1.ce915ffb1177ep+0},
      {0x1.390a251786fadp+2, 0x1.3c5100dd1200ap+2},
      {0x1.12446feb2e6cbp+2, 0x1.024eed1aa6c5dp+1},
      {0x1.cafb93b055760p-5, 0x1.86faa0b44a996p+0},
      {0x1.275f013e4f470p+2, 0x1.3fbaf374118b9p+1},
      {0x1.93b2bb50e85e4p+1, 0x1.289f137130020p+1},
      {0x1.03d84f2271eaep+1, 0x1.11439af1cb641p+2},
      {0x1.1748074adb958p+1, 0x1.1960325a954a2p+2},
      {0x1.056666b78c036p+2, 0x1.5b8ab1084e8d6p+1},
      {0x1.35a51b476fd8ap+2, 0x1.22233673cda62p+0},
  };
  return pts;
}

}  // namespace dart2
