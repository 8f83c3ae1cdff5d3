package dlib;

import java.awt.*;

public class ConsoleWindow extends BaseObject
{
    private Frame frame;
    private TextArea text;
    private TextField input;
    private Panel buttons;

    public ConsoleWindow (String title)
    {
        frame = new Frame();
        text = new TextArea();
        input = new TextField();
        buttons = new Panel();
        frame.setTitle(title);
        frame.add(text);
        frame.add(input);
        frame.add(buttons);
    }

    public void show ()
    {
        frame.pack();
        frame.show();
        input.requestFocus();
    }

    public void hide ()
    {
        frame.hide();
    }

    public void print (String message)
    {
        if (message == null)
        {
            return;
        }
        text.append(message);
    }

    public void println (String message)
    {
        print(message);
        text.append("\n");
    }

    public void clear ()
    {
        text.setText("");
        input.setText("");
    }

    public String readLine ()
    {
        String line = input.getText();
        input.setText("");
        input.requestFocus();
        return( line );
    }

    public void resize (int width, int height)
    {
        if (width > 0 && height > 0)
        {
            frame.resize(width, height);
            frame.layout();
        }
    }

    public void setFont (Font face)
    {
        text.setFont(face);
        input.setFont(face);
    }

    public void dispose ()
    {
        frame.hide();
        frame.dispose();
    }
}
