"""A five-minute tour: ground states, channels and teleportation fidelity.

    python demos/quick_tour.py

Uses D=32 so that it finishes quickly; production runs use D=70.
"""

import math

from qpt_teleport import channel, itebd, oracle, teleport

D = 32

print("lambda   E/site        exact         F(r=1)    F(r=2)    S(r=1)")
singlet = teleport.werner_state(1.0)
for lam in (0.3, 0.8, 1.0, 1.2, 3.0):
    state = itebd.find_ground_state(lam, D).state
    fids = []
    for r in (1, 2):
        rho_c = channel.rdm_two_site(state, r).rho_c
        fids.append(teleport.uhlmann_fidelity(singlet, teleport.teleport_output(singlet, rho_c)))
    entropy = channel.entanglement_entropy(channel.rdm_two_site(state, 1).rho_c)
    print(f"{lam:<8.2f} {itebd.energy_per_site(state, lam):<13.8f} "
          f"{oracle.exact_energy_density(lam):<13.8f} {fids[0]:<9.5f} {fids[1]:<9.5f} {entropy:.5f}")

# Deep in the paramagnet the channel tends to |11>, and a singlet comes out
# with fidelity 1/sqrt(2).
strong = itebd.find_ground_state(50.0, D).state
rho_c = channel.rdm_two_site(strong, 1).rho_c
f = teleport.uhlmann_fidelity(singlet, teleport.teleport_output(singlet, rho_c))
print(f"\nlambda=50: F = {f:.6f}  (1/sqrt(2) = {1 / math.sqrt(2):.6f})")
