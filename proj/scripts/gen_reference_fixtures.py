#!/usr/bin/env python3
"""Regenerates the reference fixtures under tests/data/.

reference_registry.json  - published per-category AL parameters in the
                           model-registry schema (only the AL fit is public,
                           so each entry carries that single fit).
published_mse.csv        - published per-category MSE of all three families.
ordering_inventory.csv   - the six vulnerabilities used by the ranking
                           regression checks (empty exploit dates: the checks
                           exercise the maturity curve, not exploit pinning).
"""

import csv
import json
import pathlib

DATA = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"

# kind, label, n, mse_sn, mse_l, mse_al, mu, lambda, kappa, best
TABLE = [
    ("general", "all", 27432, 1.045e-04, 5.539e-05, 5.459e-05, -2.857e-01, 2.179e+01, 9.075e-01, "al"),
    ("type", "DoS", 4022, 1.669e-04, 1.106e-04, 1.086e-04, 1.429e-01, 1.859e+01, 9.493e-01, "al"),
    ("type", "Local", 2348, 8.441e-05, 5.603e-05, 5.258e-05, 7.143e-01, 3.210e+01, 7.757e-01, "al"),
    ("type", "Remote", 4653, 6.494e-05, 4.254e-05, 4.078e-05, -3.840e-07, 3.734e+01, 7.513e-01, "al"),
    ("type", "Webapps", 16409, 2.937e-04, 2.024e-04, 2.027e-04, -4.286e-01, 1.524e+01, 1.071e+00, "laplace"),
    ("platform", "aix", 38, 1.329e-04, 1.141e-04, 1.139e-04, 5.143e+00, 2.929e+01, 9.655e-01, "al"),
    ("platform", "android", 109, 1.237e-04, 1.208e-04, 1.017e-04, 7.143e-01, 1.566e+01, 4.828e-01, "al"),
    ("platform", "asp", 1087, 3.810e-04, 2.577e-04, 2.532e-04, -4.286e-01, 1.096e+01, 1.229e+00, "al"),
    ("platform", "bsd", 106, 1.914e-04, 1.461e-04, 1.437e-04, 5.714e-01, 2.938e+01, 8.551e-01, "al"),
    ("platform", "cfm", 42, 5.631e-04, 5.041e-04, 5.008e-04, -1.429e-01, 3.108e+01, 8.365e-01, "al"),
    ("platform", "cgi", 445, 2.995e-04, 2.562e-04, 2.540e-04, -3.499e-09, 2.694e+01, 1.309e+00, "al"),
    ("platform", "hardware", 1117, 1.429e-04, 1.002e-04, 9.306e-05, 2.857e-01, 1.878e+01, 7.879e-01, "al"),
    ("platform", "hp-ux", 19, 3.927e-05, 3.406e-05, 3.940e-05, 7.000e+00, 4.970e+01, 2.012e+00, "laplace"),
    ("platform", "ios", 46, 4.638e-04, 4.367e-04, 3.855e-04, -1.000e+00, 7.168e+00, 1.750e-01, "al"),
    ("platform", "java", 222, 1.215e-04, 9.771e-05, 8.519e-05, 1.571e+00, 1.680e+01, 6.608e-01, "al"),
    ("platform", "jsp", 269, 2.536e-04, 1.801e-04, 1.741e-04, -2.857e-01, 1.338e+01, 8.006e-01, "al"),
    ("platform", "linux", 2146, 1.002e-04, 5.569e-05, 5.431e-05, 8.571e-01, 2.559e+01, 8.485e-01, "al"),
    ("platform", "macos", 80, 2.719e-03, 2.674e-03, 2.710e-03, 1.414e+01, 9.927e+00, 8.082e-01, "laplace"),
    ("platform", "multiple", 1927, 1.273e-04, 8.930e-05, 8.518e-05, 1.857e+00, 2.058e+01, 8.733e-01, "al"),
    ("platform", "novell", 16, 7.719e-05, 6.048e-05, 6.387e-05, 8.571e-01, 1.657e+01, 1.189e+00, "laplace"),
    ("platform", "osx", 229, 1.694e-04, 1.213e-04, 1.005e-04, -1.429e-01, 1.470e+01, 6.365e-01, "al"),
    ("platform", "php", 13261, 3.656e-04, 2.662e-04, 2.637e-04, -4.286e-01, 1.456e+01, 1.128e+00, "al"),
    ("platform", "python", 21, 2.935e-03, 2.775e-03, 2.542e-03, 5.472e-09, 5.063e+00, 3.694e-01, "al"),
    ("platform", "ruby", 13, 9.859e-04, 9.943e-04, 9.561e-04, -5.286e+00, 5.109e-03, 1.085e-04, "al"),
    ("platform", "sco", 12, 9.151e-04, 8.974e-04, 8.768e-04, 1.400e+01, 1.641e+01, 2.143e+00, "al"),
    ("platform", "solaris", 87, 1.092e-04, 9.905e-05, 9.846e-05, 3.143e+00, 7.539e+01, 9.213e-01, "al"),
    ("platform", "unix", 127, 8.597e-05, 6.952e-05, 6.939e-05, 2.000e+00, 5.345e+01, 1.111e+00, "al"),
    ("platform", "windows", 5906, 6.039e-05, 3.541e-05, 3.269e-05, -1.429e-01, 3.231e+01, 7.502e-01, "al"),
    ("platform", "xml", 55, 4.063e-04, 3.691e-04, 3.110e-04, -4.801e-09, 6.180e+00, 2.664e-01, "al"),
]


def write_registry():
    entries = []
    for kind, label, n, _sn, _l, mse_al, mu, lam, kappa, best in TABLE:
        entries.append(
            {
                "category": {"kind": kind, "label": label},
                "n": n,
                "best_family": best,
                "fits": [
                    {
                        "family": "al",
                        "params": {"mu": mu, "lambda": lam, "kappa": kappa},
                        "log_likelihood": None,
                        "mse": mse_al,
                        "converged": True,
                    }
                ],
            }
        )
    doc = {
        "schema_version": 1,
        "snapshot_id": "published-2023-04-02",
        "created": "2023-04-02T00:00:00Z",
        "entries": entries,
        "failures": [],
    }
    with open(DATA / "reference_registry.json", "w") as f:
        json.dump(doc, f, indent=2, sort_keys=True)
        f.write("\n")


def write_mse():
    with open(DATA / "published_mse.csv", "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["category", "n", "mse_sn", "mse_l", "mse_al", "best"])
        for kind, label, n, sn, l, al, _mu, _lam, _kappa, best in TABLE:
            w.writerow([f"{kind}:{label}", n, f"{sn:.3e}", f"{l:.3e}", f"{al:.3e}", best])


VECTOR_75 = "CVSS:3.1/AV:N/AC:L/PR:N/UI:N/S:U/C:H/I:N/A:N"
VECTOR_78 = "CVSS:3.1/AV:L/AC:L/PR:N/UI:R/S:U/C:H/I:H/A:H"

INVENTORY = [
    ("CVE-2020-13927", VECTOR_75, "2020-07-17", "webapps", "multiple"),
    ("CVE-2020-15160", VECTOR_75, "2020-08-03", "webapps", "php"),
    ("CVE-2021-24762", VECTOR_75, "2021-04-05", "webapps", "php"),
    ("CVE-2021-24946", VECTOR_75, "2021-05-17", "webapps", "php"),
    ("CVE-2021-26599", VECTOR_75, "2021-08-30", "webapps", "php"),
    ("CVE-2021-46417", VECTOR_78, "2022-02-14", "local", "linux"),
]


def write_inventory():
    with open(DATA / "ordering_inventory.csv", "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["cve_id", "vector", "cve_date", "type", "platform", "exploit_date"])
        for cve, vector, date, type_, platform in INVENTORY:
            w.writerow([cve, vector, date, type_, platform, ""])


if __name__ == "__main__":
    DATA.mkdir(parents=True, exist_ok=True)
    write_registry()
    write_mse()
    write_inventory()
    print("wrote", DATA / "reference_registry.json")
    print("wrote", DATA / "published_mse.csv")
    print("wrote", DATA / "ordering_inventory.csv")
