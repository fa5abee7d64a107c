"""Run the claim registry and print a status table.

Every registered claim records the value it expects, the value computed, and
a short anchor describing where the statement comes from.
"""

from picardlab import verify_all

results = verify_all()
for r in results:
    print(f"{r.status:>20}  {r.claim_id}")
print()
for r in results:
    if r.status == "fail":
        print("failing:", r.claim_id, "expected", r.expected, "got", r.actual)
