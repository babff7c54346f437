package simuduck;

public class Quack implements QuackBehavior {
    public void quack() {
        System.out.println("quack");
    }
}
